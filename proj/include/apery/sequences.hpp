#pragma once

// Exact constructions of the sequences the experiments feed into the guesser
// and the limit machinery.

#include <cstdint>
#include <utility>
#include <vector>

#include "apery/recurrence.hpp"

namespace apery {

/// C(n,0..n) by the multiplicative formula.
std::vector<Integer> binomial_row(std::int64_t n);

/// sum_{k=0}^{n} C(n,k)^d.
Integer binomial_power_sum(int d, std::int64_t n);

/// A^(d)(0..N) as a sequence starting at 0.
RationalSequence binomial_power_sums(int d, std::int64_t N);

/// c(n,k) = 2 sum_{m=1}^{n} (-1)^(m-1)/m^2
///        + sum_{m=1}^{k} (-1)^(n+m-1) / (m^2 C(n,m) C(n+m,m)),  0 <= k <= n.
/// The row sums are computed incrementally; DomainError outside the triangle.
Rational potential(std::int64_t n, std::int64_t k);

/// c(n, 0..n).
std::vector<Rational> potential_row(std::int64_t n);

/// c(n,k) for 0 <= k <= n <= n_max, built once and shared read-only.
class PotentialTable {
 public:
  explicit PotentialTable(std::int64_t n_max);
  std::int64_t n_max() const noexcept { return n_max_; }
  const Rational& at(std::int64_t n, std::int64_t k) const;
  const std::vector<Rational>& row(std::int64_t n) const;

 private:
  std::int64_t n_max_;
  std::vector<std::vector<Rational>> rows_;
};

/// Components of the closed 1-form F dk + G dn whose potential is c(n,k):
/// with w = (-1)^(n+k) k!^2 (n-k-1)! / ((n+1)(n+k+1)!),
/// F = (n+1) w and G = 2(n-k) w. Requires 0 <= k < n.
struct WzComponents {
  Rational F;
  Rational G;
};
WzComponents wz_form_components(std::int64_t n, std::int64_t k);

/// sum_k C(n,k)^d c(n,k).
Rational weighted_sum(int d, std::int64_t n);
/// Same, reusing a prebuilt table.
Rational weighted_sum(int d, std::int64_t n, const PotentialTable& table);

enum class FamilyKind {
  kCubic,      // integrand exponent -2/3
  kQuadratic,  // integrand exponent -1/2
};

/// Integration path for f_n(x) = ((cx+1)((c+1)x+1)/x)^n x^e.
enum class FamilyContour {
  /// Loop |x| = 1/c based at the root x = -1/c of cx+1; the integrand
  /// vanishes at the base point, so the integrals obey a homogeneous
  /// recurrence.
  kRootLoop,
  /// Unit circle cut at x = 1. Boundary terms at the cut survive.
  kUnitCircle,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kCubic;
  long c = 1;
  FamilyContour contour = FamilyContour::kRootLoop;
};

/// Denominator q of the integrand exponent -(q-1)/q: 3 for cubic, 2 for quadratic.
int family_denominator(FamilyKind kind);

/// Coefficients t_0..t_2n of ((cx+1)((c+1)x+1))^n.
std::vector<Integer> family_polynomial_power(long c, std::int64_t n);

/// s(0..N), each term a fixed n-independent multiple of the contour integral:
///   kRootLoop:  s(n) = sum_k t_k (-c)^(n-k) / (q(k-n)+1)
///   kUnitCircle: s(n) = sum_k t_k / (q(k-n)+1)
RationalSequence family_terms(const FamilySpec& spec, std::int64_t N);

}  // namespace apery
