#pragma once

// Apery limits lim B(n)/A(n) of two solutions of one recurrence, with the
// error-decay base alpha, the irrationality exponent delta and mu = 1 + 1/delta.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apery/bigreal.hpp"
#include "apery/recurrence.hpp"

namespace apery {

/// a_int / b_int in lowest terms with b_int > 0.
struct IntegerizedPair {
  Integer a_int;
  Integer b_int;
};

/// The coprime integer pair equal to a / b. Throws ZeroDenominator when b = 0.
IntegerizedPair integerize(const Rational& a, const Rational& b);

struct ConvergenceReport {
  BigReal limit;
  /// Median of |d_n / d_(n+1)| over the last quarter, d_n = r_(n+1) - r_n.
  std::optional<BigReal> alpha_estimate;
  std::optional<BigReal> delta_estimate;
  /// 1 + 1/delta, present only when delta > 0.
  std::optional<BigReal> mu_estimate;
  std::int64_t n_used = 0;
  bool empirical = true;
  int requested_digits = 0;
  /// Significant digits on which r_N and r_(N/2) agree, capped at requested_digits.
  int achieved_digits = 0;
  bool converged = false;
  /// |d_(n+1) / d_n| over the last quarter (doubles; diagnostics only).
  std::vector<double> decay_ratios;
  std::vector<std::string> warnings;

  double max_decay_ratio() const;
  /// Standard deviation over mean of decay_ratios.
  double decay_variation() const;
};

struct LimitOptions {
  bool estimate_delta = true;
};

/// lim B(n)/A(n) for explicitly given solutions over a common index range.
/// Throws DivisionByZeroSolution when A vanishes at a needed index.
ConvergenceReport limit_from_sequences(const RationalSequence& A, const RationalSequence& B, int digits,
                                       const LimitOptions& options = {});

/// Iterate both solutions of `rec` to N terms and call limit_from_sequences.
ConvergenceReport apery_limit(const PRecurrence& rec, const RationalSequence& initA, const RationalSequence& initB,
                              std::int64_t N, int digits, const LimitOptions& options = {});

/// Doubling estimate of delta in |a'/b' - L| ~ C / b'^(1+delta):
///   delta_n = -(log|e_n| - log|e_(n/2)|) / (log b'_n - log b'_(n/2)) - 1,
/// e_n = a'_n/b'_n - limit, median over the last half of the pairs.
/// pairs[i] is the pair at index start_index + i. Throws PrecisionExhausted
/// when an error is not resolved at the precision of `limit`.
BigReal delta_estimate(const std::vector<IntegerizedPair>& pairs, const BigReal& limit,
                       std::int64_t start_index = 0);

/// 1 + 1/delta; throws NonpositiveDelta when delta <= 0.
BigReal measure_from_delta(const BigReal& delta);

}  // namespace apery
