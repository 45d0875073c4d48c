#pragma once

// Linear recurrences with polynomial coefficients, iterated in exact
// rational arithmetic.
//
// Convention: sum_{i=0}^{L} c_i(n) u(n+i) = 0 (forward shifts).

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace apery {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer polynomial in n, coefficients in ascending degree. The zero
/// polynomial is the empty coefficient list.
class PolyInt {
 public:
  PolyInt() = default;
  explicit PolyInt(std::vector<Integer> coeffs);
  PolyInt(std::initializer_list<long> coeffs);

  static PolyInt product(std::span<const PolyInt> factors);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }

  PolyInt operator*(const PolyInt& other) const;
  PolyInt operator+(const PolyInt& other) const;
  PolyInt operator-() const;
  bool operator==(const PolyInt& other) const { return coeffs_ == other.coeffs_; }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const char* var = "n") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Exact Horner evaluation.
Integer eval_coeff(const PolyInt& p, const Integer& n);
Integer eval_coeff(const PolyInt& p, std::int64_t n);
Rational eval_coeff(const PolyInt& p, const Rational& x);

/// Order-L recurrence sum_{i=0}^{L} c_i(n) u(n+i) = 0, stored content-normalized:
/// the gcd of all integer coefficients is 1 and c_L has a positive leading
/// coefficient. Construction normalizes, so equal recurrences compare equal.
class PRecurrence {
 public:
  /// Throws DomainError when fewer than two polynomials are given or c_L is zero.
  explicit PRecurrence(std::vector<PolyInt> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<PolyInt>& coeffs() const noexcept { return coeffs_; }
  const PolyInt& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  /// Largest degree among the coefficient polynomials.
  int max_degree() const noexcept;

  bool operator==(const PRecurrence& other) const { return coeffs_ == other.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<PolyInt> coeffs_;
};

/// Exact rational terms u(start_index), u(start_index+1), ...
struct RationalSequence {
  std::int64_t start_index = 0;
  std::vector<Rational> terms;

  RationalSequence() = default;
  RationalSequence(std::int64_t start, std::vector<Rational> values);

  std::size_t size() const noexcept { return terms.size(); }
  std::int64_t end_index() const noexcept {
    return start_index + static_cast<std::int64_t>(terms.size());
  }
  bool covers(std::int64_t n) const noexcept { return n >= start_index && n < end_index(); }
  /// Throws OutOfRange when n is not covered.
  const Rational& at(std::int64_t n) const;
};

/// Build a sequence from integers (convenience for tests and tools).
RationalSequence make_sequence(std::int64_t start, std::initializer_list<long> values);

/// Extend `init` (exactly L terms) to N+1 terms u(s..s+N).
/// Throws SingularLeadingCoefficient when c_L(n) = 0 at a needed index.
RationalSequence iterate(const PRecurrence& rec, const RationalSequence& init, std::int64_t N);

/// sum_i c_i(n) seq(n+i); throws OutOfRange if seq does not cover n..n+L.
Rational residual(const PRecurrence& rec, const RationalSequence& seq, std::int64_t n);

/// True when residual vanishes at every index whose window seq covers.
bool annihilates(const PRecurrence& rec, const RationalSequence& seq);

/// (n+2)^3 u(n+2) - (2n+3)(17n^2+51n+39) u(n+1) + (n+1)^3 u(n) = 0, whose
/// solutions with u(0..1) = (1,5) and (0,6) are Apery's b_n and a_n.
PRecurrence zeta3_recurrence();

}  // namespace apery
