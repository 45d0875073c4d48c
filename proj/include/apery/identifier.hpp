#pragma once

// Integer relations by PSLQ and the two identifications built on it:
// minimal polynomials, and rational combinations over a small constant basis.

#include <optional>
#include <string>
#include <vector>

#include "apery/bigreal.hpp"
#include "apery/recurrence.hpp"

namespace apery {

/// sum coeffs_i x_i = 0 up to `residual`, found at `input_precision` digits.
struct IntegerRelation {
  std::vector<Integer> coeffs;
  BigReal residual;
  int input_precision = 0;
};

struct PslqResult {
  std::optional<IntegerRelation> relation;
  /// Every relation of the input has Euclidean norm at least this.
  BigReal norm_bound;
  int iterations = 0;
};

/// PSLQ with gamma = 2/sqrt(3) at `digits` working precision. A relation is
/// accepted when |sum m_i x_i| < 10^(-0.8 digits); the search stops without
/// one once the norm bound exceeds 10^max_coeff_digits. The relation is
/// divided by its content and its first nonzero entry made positive.
/// Throws PrecisionExhausted when the basis entries outgrow the precision.
PslqResult pslq(const std::vector<BigReal>& x, int max_coeff_digits, int digits);

struct AlgebraicCandidate {
  /// Content-normalized, positive leading coefficient, variable x.
  PolyInt polynomial;
  int degree = 0;
  int confirmed_at = 0;
  BigReal residual;
};

/// Sweeps d = 1..max_degree and runs pslq on [1, L, ..., L^d] at `digits`.
/// A hit is accepted only if |p(L)| < 10^(-1.6 digits) at 2*digits, so L
/// must carry at least 2*digits digits; otherwise the hit is demoted.
std::optional<AlgebraicCandidate> identify_algebraic(const BigReal& L, int max_degree, int digits);

struct NamedConstant {
  std::string name;
  BigReal value;
};

/// {zeta2, zeta3, pi} at the given precision.
std::vector<NamedConstant> default_basis(int digits);

/// L = coefficient * basis[name] + constant.
struct LinearIdentification {
  std::string name;
  Rational coefficient;
  Rational constant;
  IntegerRelation relation;
  int confirmed_at = 0;
};

/// pslq on [L, 1, b] for each basis entry; the smallest relation height
/// among confirmed hits wins. Same 2*digits reconfirmation as identify_algebraic.
std::optional<LinearIdentification> identify_linear(const BigReal& L, const std::vector<NamedConstant>& basis,
                                                    int digits);

}  // namespace apery
