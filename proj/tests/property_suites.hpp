#pragma once

// Randomized property suites shared by the unit tests and the acceptance gate.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apery/bigreal.hpp"
#include "apery/guesser.hpp"
#include "apery/identifier.hpp"
#include "apery/recurrence.hpp"
#include "apery/sequences.hpp"

namespace apery::testing {

struct SuiteResult {
  int passed = 0;
  int total = 0;
  std::string first_failure;

  bool ok() const { return total > 0 && passed == total; }
  void record(bool pass, const std::string& what) {
    ++total;
    if (pass) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
};

// Random recurrence of order 1..3 and degree 0..3 whose leading coefficient
// has no nonnegative integer root, iterated from a random integer start.
// The guess must reproduce it exactly, or be of strictly lower order.
inline SuiteResult guesser_roundtrip(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  SuiteResult out;
  const std::int64_t N = static_cast<std::int64_t>(guess_terms_required(3, 3)) + 20;
  for (int t = 0; t < trials; ++t) {
    const int L = static_cast<int>(uniform(1, 3));
    const int D = static_cast<int>(uniform(0, 3));
    std::vector<PolyInt> coeffs;
    for (int i = 0; i < L; ++i) {
      std::vector<Integer> c(static_cast<std::size_t>(D + 1));
      do {
        for (auto& x : c) x = uniform(-9, 9);
      } while (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; }));
      coeffs.emplace_back(std::move(c));
    }
    PolyInt lead{1};
    for (int j = 0; j < D; ++j) lead = lead * PolyInt{uniform(1, 4), 1};
    coeffs.push_back(lead * PolyInt{uniform(1, 3)});
    const PRecurrence planted(coeffs);

    std::vector<Rational> init(static_cast<std::size_t>(L));
    do {
      for (auto& x : init) x = uniform(-5, 5);
    } while (std::all_of(init.begin(), init.end(), [](const Rational& x) { return x == 0; }));
    const RationalSequence seq = iterate(planted, RationalSequence(0, init), N);

    const auto found = guess_recurrence(seq, 3, 3);
    // A lower-order recurrence is a correct answer when the start values
    // happen to lie in a special solution subspace.
    const bool pass = found && annihilates(*found, seq) &&
                      (*found == planted || found->order() < planted.order());
    out.record(pass, "trial " + std::to_string(t) + ": planted " + planted.to_string() + ", found " +
                         (found ? found->to_string() : std::string("nothing")));
  }
  return out;
}

// x_1..x_{n-1} random 80-digit reals, x_n fixed by a planted relation with
// entries of absolute value at most 10^6.
inline SuiteResult pslq_planted(int trials, std::uint64_t seed) {
  constexpr int kDigits = 80;
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  SuiteResult out;
  for (int t = 0; t < trials; ++t) {
    const int n = static_cast<int>(uniform(3, 5));
    std::vector<Integer> m(static_cast<std::size_t>(n));
    for (auto& v : m) v = uniform(-1000000, 1000000);
    while (m.back() == 0) m.back() = uniform(-1000000, 1000000);

    std::vector<BigReal> x;
    BigReal acc(kDigits);
    for (int i = 0; i + 1 < n; ++i) {
      std::string lit = "0.";
      for (int k = 0; k < kDigits + 10; ++k) lit += static_cast<char>('0' + uniform(0, 9));
      x.push_back(BigReal::parse(lit, kDigits) * BigReal(uniform(1, 9), kDigits));
      acc += x.back() * BigReal(m[static_cast<std::size_t>(i)], kDigits);
    }
    x.push_back(-acc / BigReal(m.back(), kDigits));

    Integer g = 0;
    for (const auto& v : m) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(v)).get_mpz_t());
    std::vector<Integer> expect = m;
    const auto lead = std::find_if(expect.begin(), expect.end(), [](const Integer& v) { return v != 0; });
    const int sign = sgn(*lead);
    for (auto& v : expect) v = v / g * sign;

    const PslqResult r = pslq(x, 9, kDigits);
    const bool pass = r.relation && r.relation->coeffs == expect;
    std::ostringstream what;
    what << "trial " << t << ": planted";
    for (const auto& v : expect) what << ' ' << v;
    if (r.relation) {
      what << "; found";
      for (const auto& v : r.relation->coeffs) what << ' ' << v;
    } else {
      what << "; no relation";
    }
    out.record(pass, what.str());
  }
  return out;
}

// F(n,k) = c(n,k+1) - c(n,k) and G(n,k) = c(n+1,k) - c(n,k), exactly.
inline SuiteResult wz_telescoping(std::int64_t n_max) {
  const PotentialTable table(n_max + 1);
  SuiteResult out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      const WzComponents w = wz_form_components(n, k);
      const bool f = w.F == table.at(n, k + 1) - table.at(n, k);
      const bool g = w.G == table.at(n + 1, k) - table.at(n, k);
      out.record(f && g, "(n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
  }
  return out;
}

}  // namespace apery::testing
