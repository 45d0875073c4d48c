// apery: command-line front end for the Apery-limit experiments.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "apery/errors.hpp"
#include "apery/experiments.hpp"
#include "apery/guesser.hpp"
#include "apery/identifier.hpp"
#include "apery/io.hpp"
#include "apery/limits.hpp"

namespace {

using apery::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecision = 2;

int default_digits(int fallback) {
  const char* env = std::getenv("APERY_DIGITS_DEFAULT");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000) {
    std::cerr << "warning: ignoring APERY_DIGITS_DEFAULT='" << env << "'\n";
    return fallback;
  }
  return static_cast<int>(v);
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_table_rows(std::ostream& out, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(row.contains(cols[i]) ? scalar(row[cols[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i)
      out << "  " << line[i] << std::string(width[i] - line[i].size(), ' ');
    out << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

void print_flat(std::ostream& out, const Json& j, const std::string& prefix) {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object() && !v.empty()) {
      print_flat(out, v, key);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << key << ":\n";
      print_table_rows(out, v);
    } else if (v.is_array() && key == "warnings") {
      for (const auto& w : v) out << "warning: " << scalar(w) << "\n";
    } else {
      out << key << ": " << scalar(v) << "\n";
    }
  }
}

struct Output {
  std::string format = "json";

  void emit(const Json& report) const {
    if (format == "table") {
      print_flat(std::cout, report, "");
    } else {
      std::cout << report.dump(2) << "\n";
    }
  }
};

// Exit 2 when the reported limit did not converge or fell short of the request.
int status_of(const Json& report, int requested) {
  const auto& d = report["details"];
  if (d.contains("converged") && !d["converged"].get<bool>()) return kExitPrecision;
  if (report["achieved_digits"].get<int>() < requested) return kExitPrecision;
  return kExitOk;
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw apery::DomainError("--c-range expects lo..hi, got '" + s + "'");
  try {
    std::size_t a = 0, b = 0;
    const long lo = std::stol(s.substr(0, dots), &a);
    const long hi = std::stol(s.substr(dots + 2), &b);
    if (a != dots || b != s.size() - dots - 2) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw apery::DomainError("--c-range expects lo..hi, got '" + s + "'");
  }
}

std::string sequence_string(const std::vector<apery::Rational>& v) {
  std::string out;
  for (const auto& q : v) out += (out.empty() ? "" : ",") + q.get_str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apery limits: recurrences, limits, irrationality exponents and constant recognition"};
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  app.add_option("--format", output.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::function<int()> action;

  // zeta3
  std::int64_t z_terms = 1000;
  int z_digits = default_digits(50);
  auto* zeta3 = app.add_subcommand("zeta3", "lim a(n)/b(n) for the zeta(3) recurrence");
  zeta3->add_option("--terms", z_terms, "Number of terms N")->check(CLI::Range(10, 10000000))->capture_default_str();
  zeta3->add_option("--digits", z_digits, "Requested digits")->check(CLI::Range(10, 100000))->capture_default_str();
  zeta3->callback([&] {
    action = [&] {
      const Json j = apery::to_json(apery::run_zeta3(z_terms, z_digits));
      output.emit(j);
      return status_of(j, z_digits);
    };
  });

  // cs
  int cs_d = 3;
  std::int64_t cs_terms = 800;
  int cs_digits = default_digits(60);
  apery::CsOptions cs_opts;
  auto* cs = app.add_subcommand("cs", "Binomial power sums A^(d) and the zeta(2)/(d+1) limit");
  cs->add_option("--d", cs_d, "Binomial power d")->required()->check(CLI::Range(3, 9));
  cs->add_option("--terms", cs_terms, "Number of terms N")->check(CLI::Range(20, 10000000))->capture_default_str();
  cs->add_option("--digits", cs_digits, "Identification digits (limit runs at twice this)")
      ->check(CLI::Range(10, 100000))
      ->capture_default_str();
  cs->add_option("--max-order", cs_opts.order_cap, "Guesser order cap")->check(CLI::Range(1, 12))->capture_default_str();
  cs->add_option("--max-degree", cs_opts.degree_cap, "Guesser degree cap")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  cs->callback([&] {
    action = [&] {
      const Json j = apery::to_json(apery::run_cs(cs_d, cs_terms, cs_digits, cs_opts));
      output.emit(j);
      return status_of(j, cs_digits);
    };
  });

  // theorem1
  int t_d = 3;
  std::int64_t t_terms = 200;
  int t_digits = default_digits(30);
  auto* th = app.add_subcommand("theorem1", "Weighted potential sums B'(n)/A(n) converging to zeta(2)");
  th->add_option("--d", t_d, "Binomial power d")->required()->check(CLI::Range(1, 64));
  th->add_option("--terms", t_terms, "Number of terms N")->check(CLI::Range(1, 1000000))->capture_default_str();
  th->add_option("--digits", t_digits, "Requested digits")->check(CLI::Range(5, 100000))->capture_default_str();
  th->callback([&] {
    action = [&] {
      const Json j = apery::to_json(apery::run_theorem1(t_d, t_terms, t_digits));
      output.emit(j);
      return status_of(j, t_digits);
    };
  });

  // family
  std::string f_kind = "cubic";
  long f_c = 0;
  std::string f_range;
  std::int64_t f_terms = 400;
  int f_digits = default_digits(60);
  unsigned f_threads = std::max(1u, std::thread::hardware_concurrency());
  apery::FamilyOptions f_opts;
  auto* fam = app.add_subcommand("family", "Cubic and quadratic irrational families");
  fam->add_option("--kind", f_kind, "Family kind")->check(CLI::IsMember({"cubic", "quadratic"}))->capture_default_str();
  auto* c_opt = fam->add_option("--c", f_c, "Family parameter c")->check(CLI::PositiveNumber);
  auto* r_opt = fam->add_option("--c-range", f_range, "Sweep lo..hi in parallel");
  c_opt->excludes(r_opt);
  r_opt->excludes(c_opt);
  fam->add_option("--terms", f_terms, "Number of terms N")->check(CLI::Range(20, 1000000))->capture_default_str();
  fam->add_option("--digits", f_digits, "Identification digits (limit runs at twice this)")
      ->check(CLI::Range(10, 100000))
      ->capture_default_str();
  fam->add_option("--threads", f_threads, "Worker threads for --c-range")->check(CLI::Range(1, 1024));
  fam->callback([&] {
    if (c_opt->count() == 0 && r_opt->count() == 0) throw CLI::RequiredError("--c or --c-range");
    action = [&] {
      const auto kind = f_kind == "cubic" ? apery::FamilyKind::kCubic : apery::FamilyKind::kQuadratic;
      if (c_opt->count()) {
        const auto rep = apery::run_family(apery::FamilySpec{kind, f_c}, f_terms, f_digits, f_opts);
        const Json j = apery::to_json(rep, f_terms, f_digits);
        output.emit(j);
        return status_of(j, f_digits);
      }
      const auto [lo, hi] = parse_range(f_range);
      const auto sweep = apery::run_family_sweep(kind, lo, hi, f_terms, f_digits, f_threads, f_opts);
      const Json j = apery::to_json(sweep, kind, f_terms, f_digits);
      output.emit(j);
      for (const auto& e : sweep)
        if (!e.report || !e.report->convergence || !e.report->convergence->converged) return kExitPrecision;
      return status_of(j, f_digits);
    };
  });

  // guess
  std::string g_input;
  int g_order = 4, g_degree = 8;
  auto* guess = app.add_subcommand("guess", "Minimal recurrence for a sequence file");
  guess->add_option("--input", g_input, "Sequence file: one p/q or integer per line")->required()->check(CLI::ExistingFile);
  guess->add_option("--max-order", g_order, "Order cap")->check(CLI::Range(1, 16))->capture_default_str();
  guess->add_option("--max-degree", g_degree, "Degree cap")->check(CLI::Range(0, 64))->capture_default_str();
  guess->callback([&] {
    action = [&] {
      const auto seq = apery::parse_sequence(apery::read_file(g_input));
      Json j = apery::base_report("guess", Json{{"input", g_input}, {"max_order", g_order}, {"max_degree", g_degree}});
      j["empirical"] = true;
      j["details"]["terms"] = seq.terms.size();
      j["details"]["start"] = seq.start_index;
      int order = g_order, degree = g_degree;
      while (apery::guess_terms_required(order, degree) > seq.terms.size() && (order > 1 || degree > 0))
        (degree > 0 ? degree : order) -= 1;
      if (apery::guess_terms_required(order, degree) > seq.terms.size())
        throw apery::InsufficientTerms("need at least " + std::to_string(apery::guess_terms_required(1, 0)) +
                                       " terms, got " + std::to_string(seq.terms.size()));
      if (order != g_order || degree != g_degree)
        j["warnings"].push_back("bounds reduced to order " + std::to_string(order) + ", degree " +
                                std::to_string(degree) + " to fit " + std::to_string(seq.terms.size()) + " terms");
      j["details"]["searched_order"] = order;
      j["details"]["searched_degree"] = degree;
      try {
        const auto rec = apery::minimal_recurrence(seq, order, degree);
        j["recurrence"] = apery::recurrence_to_json(rec);
        j["details"]["order"] = rec.order();
        j["details"]["degree"] = rec.max_degree();
        j["details"]["verified_terms"] = seq.terms.size();
        output.emit(j);
        return kExitOk;
      } catch (const apery::NotFound& e) {
        j["warnings"].push_back(e.what());
        output.emit(j);
        return kExitPrecision;
      }
    };
  });

  // limit
  std::string l_rec, l_a, l_b;
  std::int64_t l_terms = 1000;
  int l_digits = default_digits(50);
  auto* lim = app.add_subcommand("limit", "lim A(n)/B(n) for two solutions of a recurrence file");
  lim->add_option("--recurrence", l_rec, "Recurrence file (JSON)")->required()->check(CLI::ExistingFile);
  lim->add_option("--initA", l_a, "Numerator initial values, e.g. 0,6")->required();
  lim->add_option("--initB", l_b, "Denominator initial values, e.g. 1,5")->required();
  lim->add_option("--terms", l_terms, "Number of terms N")->check(CLI::Range(4, 10000000))->capture_default_str();
  lim->add_option("--digits", l_digits, "Requested digits")->check(CLI::Range(5, 100000))->capture_default_str();
  lim->callback([&] {
    action = [&] {
      const auto rec = apery::parse_recurrence(apery::read_file(l_rec));
      const auto a = apery::parse_rational_list(l_a);
      const auto b = apery::parse_rational_list(l_b);
      const auto L = static_cast<std::size_t>(rec.order());
      if (a.size() != L || b.size() != L)
        throw apery::DomainError("--initA and --initB need " + std::to_string(L) + " values each");
      // The library's limit is numerator/denominator = B/A, so the roles swap here.
      const auto conv = apery::apery_limit(rec, apery::RationalSequence(0, b), apery::RationalSequence(0, a),
                                           l_terms, l_digits);
      Json j = apery::base_report(
          "limit", Json{{"recurrence", l_rec}, {"initA", sequence_string(a)}, {"initB", sequence_string(b)},
                        {"terms", l_terms}, {"digits", l_digits}});
      j["recurrence"] = apery::recurrence_to_json(rec);
      apery::fill_convergence(j, conv);
      output.emit(j);
      return status_of(j, l_digits);
    };
  });

  // identify
  std::string i_value;
  int i_degree = 4;
  int i_digits = 0;
  bool i_linear = false;
  auto* ident = app.add_subcommand("identify", "Recognise a numeric value as algebraic or over {zeta2, zeta3, pi}");
  ident->add_option("--value", i_value, "File holding one decimal literal")->required()->check(CLI::ExistingFile);
  ident->add_option("--degree", i_degree, "Maximum polynomial degree")->check(CLI::Range(1, 16))->capture_default_str();
  ident->add_option("--digits", i_digits, "Working digits (default: half the digits in the file)")
      ->check(CLI::Range(40, 100000));
  ident->add_flag("--linear", i_linear, "Fall back to r*K + s over {zeta2, zeta3, pi}");
  ident->callback([&] {
    action = [&] {
      const apery::BigReal v = apery::parse_value(apery::read_file(i_value));
      const int digits = i_digits > 0 ? i_digits : v.digits() / 2;
      if (digits < 40)
        throw apery::PrecisionExhausted("identify needs at least 80 significant digits in the value file, got " +
                                        std::to_string(v.digits()));
      Json j = apery::base_report("identify", Json{{"value", i_value}, {"degree", i_degree}, {"digits", digits}});
      j["limit_digits"] = v.to_string(v.digits());
      j["achieved_digits"] = v.digits();
      j["empirical"] = true;
      if (auto alg = apery::identify_algebraic(v, i_degree, digits)) {
        Json coeffs = Json::array();
        for (const auto& c : alg->polynomial.coeffs()) coeffs.push_back(c.get_str());
        j["identified"] = Json{{"kind", "algebraic"},         {"coefficients", std::move(coeffs)},
                               {"degree", alg->degree},        {"residual", alg->residual.to_string(6)},
                               {"confirmed_at", alg->confirmed_at}};
      } else if (i_linear) {
        if (auto lin = apery::identify_linear(v, apery::default_basis(2 * digits), digits)) {
          j["identified"] = Json{{"kind", "linear"},
                                 {"basis", lin->name},
                                 {"coefficient", lin->coefficient.get_str()},
                                 {"constant", lin->constant.get_str()},
                                 {"residual", lin->relation.residual.to_string(6)},
                                 {"confirmed_at", lin->confirmed_at}};
        }
      }
      if (j["identified"].is_null()) j["warnings"].push_back("no relation found within the coefficient bound");
      output.emit(j);
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const apery::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const apery::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const apery::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecision;
  }
}
