#pragma once

// The cubic and quadratic integral families: end-to-end runs, and exact
// checks of the algebraic claims about their limits.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apery/bigreal.hpp"
#include "apery/identifier.hpp"
#include "apery/limits.hpp"
#include "apery/recurrence.hpp"
#include "apery/sequences.hpp"

namespace apery {

/// p + q theta + r theta^2 in Q(theta), theta^3 = (c+1)/c.
class CubicFieldElement {
 public:
  CubicFieldElement(long c, Rational p, Rational q = 0, Rational r = 0);
  static CubicFieldElement theta(long c) { return CubicFieldElement(c, 0, 1, 0); }

  long c() const noexcept { return c_; }
  const std::array<Rational, 3>& coords() const noexcept { return v_; }
  bool is_zero() const;

  CubicFieldElement operator+(const CubicFieldElement& o) const;
  CubicFieldElement operator-(const CubicFieldElement& o) const;
  CubicFieldElement operator*(const CubicFieldElement& o) const;
  /// Throws NonInvertibleDenominator for zero.
  CubicFieldElement inverse() const;
  CubicFieldElement operator/(const CubicFieldElement& o) const { return *this * o.inverse(); }
  bool operator==(const CubicFieldElement& o) const { return c_ == o.c_ && v_ == o.v_; }

  /// Numeric value with theta the real cube root.
  BigReal value(int digits) const;

 private:
  long c_;
  std::array<Rational, 3> v_;
};

/// 64 + 144(1+2c) x + 108(3c^2+3c+1) x^2 + 27(1+2c) x^3.
PolyInt cubic_poly(long c);

/// 4 x^2 + (24c+12) x + 9, whose roots are -3c - 3/2 -+ 3 sqrt(c^2+c).
PolyInt quadratic_poly(long c);

/// alpha = (4 theta - 4) / (-(9c+3) theta + 9c + 6) as a field element.
CubicFieldElement root_element(long c);

/// Exact test that cubic_poly(c) vanishes at root_element(c).
bool verify_root_identity(long c);

/// The real root of cubic_poly(c). Uniqueness is certified by an exact
/// negative discriminant, else MultipleRealRoots.
BigReal real_root(long c, int digits);

/// -3c - 3/2 - 3 sqrt(c^2 + c).
BigReal quadratic_closed_form(long c, int digits);

struct KappaValue {
  BigReal value;
  /// Set for c < 4, where the bound the formula comes from does not apply.
  std::optional<std::string> warning;
};

/// log(e^0.911 (sqrt(c+1)+sqrt(c))^2) / log(e^-0.911 (sqrt(c+1)-sqrt(c))^-2).
KappaValue kappa(long c, int digits);

struct FamilyOptions {
  int order_cap = 3;
  int degree_cap = 6;
  /// pslq degree sweep bound.
  int max_degree = 4;
};

struct FamilyReport {
  FamilySpec spec;
  std::optional<PRecurrence> recurrence;
  std::optional<ConvergenceReport> convergence;
  std::optional<AlgebraicCandidate> identified;
  /// Expected polynomial: cubic_poly(c) or quadratic_poly(c).
  PolyInt expected;
  bool polynomial_matches = false;
  std::optional<BigReal> closed_form;
  bool closed_form_agrees = false;
  std::optional<bool> root_identity;
  std::optional<KappaValue> kappa;
  std::optional<BigReal> mu_estimate;
  std::vector<std::string> warnings;
};

/// family_terms -> minimal_recurrence -> apery_limit with A = (1, 0),
/// B = (0, 1) -> identify_algebraic -> comparison with the closed form.
/// The limit is taken at 2*digits so that identification can reconfirm.
FamilyReport run_family(const FamilySpec& spec, std::int64_t N, int digits, const FamilyOptions& options = {});

/// True when p = k q for a nonzero rational k.
bool proportional(const PolyInt& p, const PolyInt& q);

}  // namespace apery
