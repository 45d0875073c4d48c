#include "apery/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "apery/errors.hpp"
#include "json.hpp"

namespace apery {

namespace {

struct Position {
  int line = 1;
  int column = 1;
};

Position position_of(const std::string& text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Position of the first occurrence of `needle`, or of the start of the text.
Position locate(const std::string& text, const std::string& needle) {
  const std::size_t at = needle.empty() ? std::string::npos : text.find(needle);
  return position_of(text, at == std::string::npos ? 0 : at);
}

[[noreturn]] void fail_at(const std::string& text, const std::string& needle, const std::string& what) {
  const Position p = locate(text, needle);
  throw ParseError(what, p.line, p.column);
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer integer_from(const std::string& s) { return Integer(s[0] == '+' ? s.substr(1) : s, 10); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Parses "p/q" or "p"; `column` is the 1-based column of s[0] for diagnostics.
Rational rational_from(const std::string& s, int line, int column) {
  const auto slash = s.find('/');
  const std::string num = trim(s.substr(0, slash));
  if (!is_integer_literal(num)) {
    const auto bad = s.find_first_not_of("+-0123456789 \t");
    throw ParseError("expected an integer or p/q, got '" + s + "'", line,
                     column + static_cast<int>(bad == std::string::npos ? 0 : bad));
  }
  if (slash == std::string::npos) return Rational(integer_from(num));
  const std::string den = trim(s.substr(slash + 1));
  if (!is_integer_literal(den)) {
    const std::string rest = s.substr(slash + 1);
    const auto bad = rest.find_first_not_of("+-0123456789 \t");
    throw ParseError("malformed denominator in '" + s + "'", line,
                     column + static_cast<int>(slash + 1 + (bad == std::string::npos ? 0 : bad)));
  }
  const Integer q = integer_from(den);
  if (q == 0) throw ParseError("zero denominator in '" + s + "'", line, column + static_cast<int>(slash) + 1);
  Rational r(integer_from(num), q);
  r.canonicalize();
  return r;
}

}  // namespace

PRecurrence parse_recurrence(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const Position p = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON", p.line, p.column);
  }
  if (!j.is_object()) fail_at(text, "", "recurrence file must hold a JSON object");
  if (!j.contains("order") || !j["order"].is_number_integer()) fail_at(text, "\"order\"", "missing integer \"order\"");
  const auto order = j["order"].get<long long>();
  if (order < 1) fail_at(text, "\"order\"", "\"order\" must be positive");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) fail_at(text, "\"coeffs\"", "missing array \"coeffs\"");
  const auto& rows = j["coeffs"];
  if (rows.size() != static_cast<std::size_t>(order + 1))
    fail_at(text, "\"coeffs\"", "\"coeffs\" must hold order+1 = " + std::to_string(order + 1) + " arrays");
  std::vector<PolyInt> polys;
  for (const auto& row : rows) {
    if (!row.is_array()) fail_at(text, "\"coeffs\"", "each coefficient polynomial must be an array");
    std::vector<Integer> c;
    for (const auto& v : row) {
      if (!v.is_string()) fail_at(text, v.dump(), "coefficients must be decimal integer strings");
      const std::string s = v.get<std::string>();
      if (!is_integer_literal(s)) fail_at(text, "\"" + s + "\"", "not a decimal integer: '" + s + "'");
      c.push_back(integer_from(s));
    }
    polys.emplace_back(std::move(c));
  }
  if (polys.back().is_zero()) fail_at(text, "\"coeffs\"", "leading polynomial c_L must be nonzero");
  return PRecurrence(std::move(polys));
}

std::string format_recurrence(const PRecurrence& rec) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& p : rec.coeffs()) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) row.push_back(c.get_str());
    coeffs.push_back(std::move(row));
  }
  nlohmann::ordered_json j{{"order", rec.order()}, {"coeffs", std::move(coeffs)}};
  return j.dump() + "\n";
}

RationalSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::int64_t start = 0;
  bool seen_value = false;
  std::vector<Rational> values;
  for (int line = 1; std::getline(in, raw); ++line) {
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const int column = static_cast<int>(first) + 1;
    if (raw[first] == '#') {
      const std::string body = trim(raw.substr(first + 1));
      if (body.rfind("start=", 0) == 0) {
        if (seen_value) throw ParseError("start header after the first value", line, column);
        const std::string idx = trim(body.substr(6));
        if (!is_integer_literal(idx) || idx[0] == '-')
          throw ParseError("start index must be a nonnegative integer", line, column);
        start = std::stoll(idx);
      }
      continue;
    }
    values.push_back(rational_from(trim(raw), line, column));
    seen_value = true;
  }
  return RationalSequence(start, std::move(values));
}

std::string format_sequence(const RationalSequence& seq) {
  std::string out = "# start=" + std::to_string(seq.start_index) + "\n";
  for (const auto& t : seq.terms) out += t.get_str() + "\n";
  return out;
}

BigReal parse_value(const std::string& text) {
  const auto b = text.find_first_not_of(" \t\r\n");
  const std::string body = b == std::string::npos ? "" : text.substr(b, text.find_last_not_of(" \t\r\n") - b + 1);
  if (body.empty()) throw ParseError("empty value", 1, 1);
  int sig = 0;
  bool leading = true;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char ch = body[i];
    if (ch == 'e' || ch == 'E') break;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (ch != '0') leading = false;
      if (!leading) ++sig;
    } else if (ch != '.' && !((ch == '-' || ch == '+') && i == 0)) {
      throw ParseError("not a decimal number", 1, static_cast<int>(i) + 1);
    }
  }
  try {
    return BigReal::parse(body, std::max(sig, 1));
  } catch (const DomainError&) {
    throw ParseError("not a decimal number", 1, 1);
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(rational_from(trim(item), 1, static_cast<int>(pos) + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace apery
