#include "apery/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "apery/errors.hpp"

namespace apery {

namespace {

constexpr int kDiagnosticDigits = 30;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

BigReal from_double(double x, int digits) {
  BigReal out(digits);
  mpfr_set_d(out.raw(), x, MPFR_RNDN);
  return out;
}

double log10_integer(const Integer& z) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

double log10_rational(const Rational& q) { return log10_integer(q.get_num()) - log10_integer(q.get_den()); }

}  // namespace

IntegerizedPair integerize(const Rational& a, const Rational& b) {
  if (b == 0) throw ZeroDenominator("integerize: zero denominator");
  Rational q = a / b;
  return {q.get_num(), q.get_den()};
}

double ConvergenceReport::max_decay_ratio() const {
  if (decay_ratios.empty()) return 0.0;
  return *std::max_element(decay_ratios.begin(), decay_ratios.end());
}

double ConvergenceReport::decay_variation() const {
  if (decay_ratios.size() < 2) return 0.0;
  const double n = static_cast<double>(decay_ratios.size());
  const double mean = std::accumulate(decay_ratios.begin(), decay_ratios.end(), 0.0) / n;
  double var = 0.0;
  for (double r : decay_ratios) var += (r - mean) * (r - mean);
  return std::sqrt(var / (n - 1)) / mean;
}

ConvergenceReport limit_from_sequences(const RationalSequence& A, const RationalSequence& B, int digits,
                                       const LimitOptions& options) {
  if (digits < 1) throw DomainError("limit needs digits >= 1");
  if (A.start_index != B.start_index || A.size() != B.size() || A.size() < 2)
    throw DomainError("limit needs two solutions over the same index range");
  const std::int64_t s = A.start_index;
  const std::int64_t N = A.end_index() - 1;
  const std::int64_t half = s + (N - s) / 2;
  auto ratio = [&](std::int64_t n) {
    if (A.at(n) == 0) throw DivisionByZeroSolution(n);
    return Rational(B.at(n) / A.at(n));
  };

  ConvergenceReport rep;
  rep.n_used = N;
  rep.requested_digits = digits;
  const Rational rN = ratio(N);
  const Rational rH = ratio(half);
  rep.limit = BigReal(rN, digits);

  const Rational gap = rN - rH;
  double gap_digits = 0.0;  // -log10 |r_N - r_(N/2)|
  if (gap == 0) {
    rep.achieved_digits = digits;
  } else {
    gap_digits = -log10_rational(abs(gap));
    const double mag = rN == 0 ? 0.0 : log10_rational(abs(rN));
    const double agree = gap_digits + mag;
    rep.achieved_digits = static_cast<int>(std::clamp(std::floor(agree), 0.0, static_cast<double>(digits)));
  }

  // Consecutive differences d_n = r_(n+1) - r_n = Casoratian / (A_n A_(n+1)).
  const std::int64_t span = std::max<std::int64_t>((N - s) / 4, 2);
  std::vector<double> alphas;
  for (std::int64_t n = std::max(s, N - span); n + 1 < N; ++n) {
    auto diff = [&](std::int64_t m) {
      if (A.at(m) == 0) throw DivisionByZeroSolution(m);
      if (A.at(m + 1) == 0) throw DivisionByZeroSolution(m + 1);
      const Rational cas = B.at(m + 1) * A.at(m) - B.at(m) * A.at(m + 1);
      return BigReal(Rational(cas / (A.at(m) * A.at(m + 1))), kDiagnosticDigits);
    };
    const BigReal d0 = diff(n), d1 = diff(n + 1);
    if (d0.is_zero() || d1.is_zero()) continue;
    const double l = d0.log10_abs() - d1.log10_abs();
    alphas.push_back(std::pow(10.0, l));
    rep.decay_ratios.push_back(std::pow(10.0, -l));
  }

  if (alphas.empty()) {
    if (gap == 0 && N - s >= 4) {
      rep.converged = true;
      rep.warnings.push_back("B/A is constant over the tail; no decay base");
    } else {
      rep.warnings.push_back("too few terms to estimate the decay base");
    }
  } else {
    const double alpha = median(alphas);
    rep.alpha_estimate = from_double(alpha, kDiagnosticDigits);
    rep.converged = alpha > 1.0;
    if (!rep.converged) rep.warnings.push_back("B/A does not converge geometrically (alpha <= 1)");
  }
  if (rep.achieved_digits < digits)
    rep.warnings.push_back("achieved " + std::to_string(rep.achieved_digits) + " of " + std::to_string(digits) +
                           " requested digits; increase the number of terms");

  if (options.estimate_delta && rep.converged && gap != 0 && half - s >= 8) {
    // Pairs over s..N/2, starting after the last zero of A.
    std::int64_t lo = s;
    for (std::int64_t n = s; n <= half; ++n)
      if (A.at(n) == 0) lo = n + 1;
    std::vector<IntegerizedPair> pairs;
    pairs.reserve(static_cast<std::size_t>(half - lo + 1));
    for (std::int64_t n = lo; n <= half; ++n) pairs.push_back(integerize(B.at(n), A.at(n)));
    const double mag = rN == 0 ? 0.0 : std::max(0.0, log10_rational(abs(rN)));
    const int ref_digits = std::max(digits, static_cast<int>(std::ceil(gap_digits + mag)) + 30);
    try {
      rep.delta_estimate = delta_estimate(pairs, BigReal(rN, ref_digits), lo);
      if (rep.delta_estimate->sign() > 0) rep.mu_estimate = measure_from_delta(*rep.delta_estimate);
      else rep.warnings.push_back("delta estimate is not positive; no irrationality measure");
    } catch (const PrecisionExhausted& e) {
      rep.warnings.push_back(std::string("delta: ") + e.what());
    }
  }
  return rep;
}

ConvergenceReport apery_limit(const PRecurrence& rec, const RationalSequence& initA, const RationalSequence& initB,
                              std::int64_t N, int digits, const LimitOptions& options) {
  if (initA.start_index != initB.start_index) throw DomainError("initial vectors must start at the same index");
  const RationalSequence A = iterate(rec, initA, N);
  const RationalSequence B = iterate(rec, initB, N);
  return limit_from_sequences(A, B, digits, options);
}

BigReal delta_estimate(const std::vector<IntegerizedPair>& pairs, const BigReal& limit, std::int64_t start_index) {
  if (pairs.size() < 4) throw DomainError("delta_estimate needs at least 4 pairs");
  const int P = limit.digits();
  const double floor_digits = (limit.is_zero() ? 0.0 : limit.log10_abs()) - (P - 5);

  auto log_error = [&](const IntegerizedPair& p, std::int64_t n) {
    if (p.b_int <= 0) throw DomainError("delta_estimate needs positive denominators");
    const BigReal e = BigReal(Rational(p.a_int, p.b_int), P) - limit;
    const double le = e.log10_abs();
    if (e.is_zero() || le < floor_digits)
      throw PrecisionExhausted("error at n = " + std::to_string(n) + " is below the resolution of the limit (" +
                               std::to_string(P) + " digits)");
    return le;
  };

  std::vector<double> deltas;
  for (std::size_t i = pairs.size() / 2; i < pairs.size(); ++i) {
    const std::int64_t n = start_index + static_cast<std::int64_t>(i);
    const std::int64_t h = n / 2;
    if (h < start_index) continue;
    const std::size_t j = static_cast<std::size_t>(h - start_index);
    if (j >= i) continue;
    const double lb = log10_integer(pairs[i].b_int) - log10_integer(pairs[j].b_int);
    if (lb <= 0.0) continue;
    const double le = log_error(pairs[i], n) - log_error(pairs[j], h);
    deltas.push_back(-le / lb - 1.0);
  }
  if (deltas.empty()) throw DomainError("delta_estimate: denominators do not grow over the window");
  return from_double(median(std::move(deltas)), kDiagnosticDigits);
}

BigReal measure_from_delta(const BigReal& delta) {
  if (delta.sign() <= 0) throw NonpositiveDelta("measure_from_delta needs delta > 0");
  const BigReal one(1L, delta.digits());
  return one + one / delta;
}

}  // namespace apery
