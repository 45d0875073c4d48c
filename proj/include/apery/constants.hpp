#pragma once

// Reference constants and the few elementary functions the experiments need.
// Every routine here computes at digits + kGuardDigits internally.

#include "apery/bigreal.hpp"

namespace apery {

enum class MachinFormula {
  kMachin,  // pi/4 = 4 atan(1/5) - atan(1/239)
  kGauss,   // pi/4 = 12 atan(1/18) + 8 atan(1/57) - 5 atan(1/239)
};

/// pi from an arctangent formula; memoized per (formula, digits).
BigReal pi(int digits, MachinFormula formula = MachinFormula::kMachin);

/// pi^2 / 6.
BigReal zeta2(int digits);

/// Which of ζ(3)'s two truncation depths to return.
enum class Zeta3Depth {
  kDoubled,  // the deeper of two N-doublings that agree to digits + 5
  kShallow,  // the shallower one
};

/// ζ(3) as the ratio a(N)/b(N) of the two Apery solutions of zeta3_recurrence().
BigReal zeta3(int digits, Zeta3Depth depth = Zeta3Depth::kDoubled);

/// Smallest N of the doubling schedule used by zeta3(digits).
long zeta3_terms_used(int digits);

/// k-th root of x > 0: bisection seed, then Newton. Throws DomainError for x <= 0.
BigReal nth_root(const BigReal& x, unsigned k, int digits);
BigReal sqrt(const BigReal& x, int digits);

/// Natural logarithm of x > 0 via argument reduction and the atanh series.
BigReal log(const BigReal& x, int digits);

/// atan(1/x) for integer x >= 2 summed as an exact rational plus tail bound.
BigReal atan_inverse(unsigned long x, int digits);

}  // namespace apery
