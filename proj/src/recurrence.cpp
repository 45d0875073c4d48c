#include "apery/recurrence.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "apery/errors.hpp"

namespace apery {

PolyInt::PolyInt(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyInt::PolyInt(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void PolyInt::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyInt PolyInt::product(std::span<const PolyInt> factors) {
  PolyInt out{1};
  for (const auto& f : factors) out = out * f;
  return out;
}

PolyInt PolyInt::operator*(const PolyInt& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return PolyInt(std::move(out));
}

PolyInt PolyInt::operator+(const PolyInt& other) const {
  std::vector<Integer> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return PolyInt(std::move(out));
}

PolyInt PolyInt::operator-() const {
  std::vector<Integer> out = coeffs_;
  for (auto& c : out) c = -c;
  return PolyInt(std::move(out));
}

std::string PolyInt::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) os << mag.get_str();
    if (d >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

Integer eval_coeff(const PolyInt& p, const Integer& n) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

Integer eval_coeff(const PolyInt& p, std::int64_t n) {
  return eval_coeff(p, Integer(static_cast<long>(n)));
}

Rational eval_coeff(const PolyInt& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += Rational(*it);
  }
  return acc;
}

PRecurrence::PRecurrence(std::vector<PolyInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("recurrence needs order >= 1");
  if (coeffs_.back().is_zero()) throw DomainError("leading coefficient polynomial is zero");

  Integer g = 0;
  for (const auto& p : coeffs_)
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (coeffs_.back().leading() < 0) g = -g;
  if (g != 1) {
    for (auto& p : coeffs_) {
      std::vector<Integer> scaled = p.coeffs();
      for (auto& c : scaled) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      p = PolyInt(std::move(scaled));
    }
  }
}

int PRecurrence::max_degree() const noexcept {
  int d = 0;
  for (const auto& p : coeffs_) d = std::max(d, p.degree());
  return d;
}

std::string PRecurrence::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    const PolyInt& p = coeffs_[static_cast<std::size_t>(i)];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")*u(n" << (i ? "+" + std::to_string(i) : "") << ")";
  }
  os << " = 0";
  return os.str();
}

RationalSequence::RationalSequence(std::int64_t start, std::vector<Rational> values)
    : start_index(start), terms(std::move(values)) {
  for (auto& t : terms) t.canonicalize();
}

const Rational& RationalSequence::at(std::int64_t n) const {
  if (!covers(n))
    throw OutOfRange("index " + std::to_string(n) + " outside sequence range [" +
                     std::to_string(start_index) + ", " + std::to_string(end_index()) + ")");
  return terms[static_cast<std::size_t>(n - start_index)];
}

RationalSequence make_sequence(std::int64_t start, std::initializer_list<long> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return RationalSequence(start, std::move(out));
}

RationalSequence iterate(const PRecurrence& rec, const RationalSequence& init, std::int64_t N) {
  const int L = rec.order();
  if (static_cast<int>(init.size()) != L)
    throw DomainError("iterate needs exactly " + std::to_string(L) + " initial terms, got " +
                      std::to_string(init.size()));
  if (N + 1 < L) throw DomainError("requested fewer terms than the order");

  std::vector<Rational> u = init.terms;
  u.reserve(static_cast<std::size_t>(N + 1));
  Rational acc, cn;
  for (std::int64_t n = init.start_index; static_cast<std::int64_t>(u.size()) < N + 1; ++n) {
    Integer lead = eval_coeff(rec.coeff(L), n);
    if (lead == 0) throw SingularLeadingCoefficient(n);
    acc = 0;
    const std::size_t base = static_cast<std::size_t>(n - init.start_index);
    for (int i = 0; i < L; ++i) {
      cn = eval_coeff(rec.coeff(i), n);
      acc += cn * u[base + static_cast<std::size_t>(i)];
    }
    acc /= Rational(lead);
    acc = -acc;
    u.push_back(acc);
  }
  return RationalSequence(init.start_index, std::move(u));
}

Rational residual(const PRecurrence& rec, const RationalSequence& seq, std::int64_t n) {
  if (!seq.covers(n) || !seq.covers(n + rec.order()))
    throw OutOfRange("sequence does not cover the window at n = " + std::to_string(n));
  Rational acc = 0;
  for (int i = 0; i <= rec.order(); ++i) acc += Rational(eval_coeff(rec.coeff(i), n)) * seq.at(n + i);
  return acc;
}

bool annihilates(const PRecurrence& rec, const RationalSequence& seq) {
  for (std::int64_t n = seq.start_index; n + rec.order() < seq.end_index(); ++n)
    if (residual(rec, seq, n) != 0) return false;
  return true;
}

PRecurrence zeta3_recurrence() {
  // c0 = (n+1)^3, c1 = -(2n+3)(17n^2+51n+39), c2 = (n+2)^3
  const PolyInt c0{1, 3, 3, 1};
  const PolyInt c1 = -(PolyInt{3, 2} * PolyInt{39, 51, 17});
  const PolyInt c2{8, 12, 6, 1};
  return PRecurrence({c0, c1, c2});
}

}  // namespace apery
