#include "apery/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "apery/errors.hpp"
#include "apery/recurrence.hpp"

namespace apery {

namespace {

// Process-wide memo of constants keyed by (name, variant, digits).
class ConstantCache {
 public:
  template <typename Compute>
  BigReal get(const std::string& name, int variant, int digits, Compute&& compute) {
    const Key key{name, variant, digits};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    BigReal value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  using Key = std::tuple<std::string, int, int>;
  std::shared_mutex mutex_;
  std::map<Key, BigReal> table_;
};

ConstantCache& cache() {
  static ConstantCache instance;
  return instance;
}

mpq_class pow10_rational_neg(int k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return mpq_class(1, den);
}

// Alternating or positive series sum_{k>=0} s^k / ((2k+1) x^(2k+1)) with
// s = -1 (atan) or +1 (atanh), summed exactly until the first omitted term
// (times 9/8 for the positive case) is below 10^-(digits + guard + 5).
mpq_class inverse_odd_series(unsigned long x, bool alternating, int digits) {
  const mpq_class tol = pow10_rational_neg(digits + kGuardDigits + 5);
  const mpz_class x2 = mpz_class(x) * x;
  mpz_class xpow = x;  // x^(2k+1)
  mpq_class sum = 0;
  for (unsigned long k = 0;; ++k) {
    mpq_class term(1, xpow * (2 * k + 1));
    term.canonicalize();
    if (alternating && (k % 2 == 1)) sum -= term;
    else sum += term;
    xpow *= x2;
    mpq_class next(1, xpow * (2 * k + 3));
    next.canonicalize();
    if (!alternating) next *= mpq_class(9, 8);  // geometric tail bound for x >= 3
    if (next < tol) break;
  }
  return sum;
}

BigReal ln2(int digits) {
  return cache().get("ln2", 0, digits, [digits] {
    return BigReal(mpq_class(2) * inverse_odd_series(3, false, digits), digits);
  });
}

}  // namespace

BigReal atan_inverse(unsigned long x, int digits) {
  if (x < 2) throw DomainError("atan_inverse needs x >= 2");
  return BigReal(inverse_odd_series(x, true, digits), digits);
}

BigReal pi(int digits, MachinFormula formula) {
  if (digits < 1) throw DomainError("pi needs digits >= 1");
  return cache().get("pi", static_cast<int>(formula), digits, [digits, formula] {
    const int wd = digits + 5;
    mpq_class quarter;
    if (formula == MachinFormula::kMachin) {
      quarter = 4 * inverse_odd_series(5, true, wd) - inverse_odd_series(239, true, wd);
    } else {
      quarter = 12 * inverse_odd_series(18, true, wd) + 8 * inverse_odd_series(57, true, wd) -
                5 * inverse_odd_series(239, true, wd);
    }
    return BigReal(mpq_class(4) * quarter, digits);
  });
}

BigReal zeta2(int digits) {
  return cache().get("zeta2", 0, digits, [digits] {
    const BigReal p = pi(digits + 5);
    return ((p * p) / BigReal(6L, digits + 5)).with_digits(digits);
  });
}

namespace {

struct Zeta3Run {
  mpq_class shallow;
  mpq_class deep;
  long n_shallow = 0;
};

Zeta3Run zeta3_run(int digits) {
  const PRecurrence rec = zeta3_recurrence();
  const mpq_class tol = pow10_rational_neg(digits + 5);
  long n = 8;
  auto ratio_at = [&rec](long N) {
    const RationalSequence a = iterate(rec, make_sequence(0, {0, 6}), N);
    const RationalSequence b = iterate(rec, make_sequence(0, {1, 5}), N);
    return mpq_class(a.terms.back() / b.terms.back());
  };
  mpq_class prev = ratio_at(n);
  for (;;) {
    mpq_class next = ratio_at(2 * n);
    mpq_class diff = next - prev;
    if (abs(diff) < tol) return {prev, next, n};
    prev = next;
    n *= 2;
  }
}

}  // namespace

BigReal zeta3(int digits, Zeta3Depth depth) {
  if (digits < 1) throw DomainError("zeta3 needs digits >= 1");
  return cache().get("zeta3", static_cast<int>(depth), digits, [digits, depth] {
    const Zeta3Run run = zeta3_run(digits);
    return BigReal(depth == Zeta3Depth::kDoubled ? run.deep : run.shallow, digits);
  });
}

long zeta3_terms_used(int digits) { return zeta3_run(digits).n_shallow; }

BigReal nth_root(const BigReal& x, unsigned k, int digits) {
  if (k == 0) throw DomainError("nth_root needs k >= 1");
  if (x.sign() <= 0) throw DomainError("nth_root needs x > 0");
  if (k == 1) return x.with_digits(digits);
  const int wd = digits + 10;
  const BigReal xw = x.with_digits(wd);

  // x = m * 2^e with m in [1/2, 1); split e = q k + r so that
  // x^(1/k) = (m 2^r)^(1/k) * 2^q and the bracketed part lies in [0, 2].
  const long e = mpfr_get_exp(xw.raw());
  long q = e / static_cast<long>(k);
  long r = e - q * static_cast<long>(k);
  if (r < 0) {
    r += k;
    q -= 1;
  }
  BigReal reduced(xw);
  mpfr_mul_2si(reduced.raw(), reduced.raw(), -e + r, MPFR_RNDN);
  const double target = reduced.to_double();
  double lo = 0.0, hi = 2.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::pow(mid, static_cast<double>(k)) < target ? lo : hi) = mid;
  }
  BigReal y(wd);
  mpfr_set_d(y.raw(), 0.5 * (lo + hi), MPFR_RNDN);
  mpfr_mul_2si(y.raw(), y.raw(), q, MPFR_RNDN);

  const BigReal kk(static_cast<long>(k), wd);
  const BigReal km1(static_cast<long>(k) - 1, wd);
  const mpfr_prec_t bits = mpfr_get_prec(y.raw());
  for (int iter = 0; iter < 200; ++iter) {
    BigReal next = (km1 * y + xw / y.pow(k - 1)) / kk;
    BigReal delta = (next - y).abs();
    y = std::move(next);
    if (delta.is_zero()) break;
    const long de = mpfr_get_exp(delta.raw());
    if (de < mpfr_get_exp(y.raw()) - static_cast<long>(bits) + 2) break;
  }
  return y.with_digits(digits);
}

BigReal sqrt(const BigReal& x, int digits) { return nth_root(x, 2, digits); }

BigReal log(const BigReal& x, int digits) {
  if (x.sign() <= 0) throw DomainError("log needs x > 0");
  const int wd = digits + 10;
  BigReal m = x.with_digits(wd);
  long e = mpfr_get_exp(m.raw());
  mpfr_mul_2si(m.raw(), m.raw(), -e, MPFR_RNDN);  // m in [1/2, 1)
  if (m < BigReal::parse("0.70710678118654752440", wd)) {
    mpfr_mul_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    e -= 1;
  }
  const BigReal one(1L, wd);
  const BigReal z = (m - one) / (m + one);
  const BigReal z2 = z * z;
  const double stop = -(wd + kGuardDigits + 2.0);
  BigReal power = z;
  BigReal sum(wd);
  for (long k = 0;; ++k) {
    BigReal term = power / BigReal(2 * k + 1, wd);
    sum += term;
    if (term.is_zero() || term.log10_abs() < stop) break;
    power *= z2;
  }
  BigReal out = BigReal(2L, wd) * sum;
  if (e != 0) out += BigReal(e, wd) * ln2(wd);
  return out.with_digits(digits);
}

}  // namespace apery
