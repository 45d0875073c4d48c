#include "doctest.h"

#include <cmath>
#include <complex>

#include "apery/constants.hpp"
#include "apery/errors.hpp"
#include "apery/sequences.hpp"
#include "property_suites.hpp"

using namespace apery;

namespace {

Integer binom(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// c(n,k) summed term by term from its definition.
Rational potential_direct(long n, long k) {
  Rational s = 0;
  for (long m = 1; m <= n; ++m) s += Rational((m % 2 == 1) ? 2 : -2, Integer(m) * m);
  for (long m = 1; m <= k; ++m) {
    const Rational t(1, Integer(m) * m * binom(n, m) * binom(n + m, m));
    s += ((n + m - 1) % 2 == 0) ? t : Rational(-t);
  }
  s.canonicalize();
  return s;
}

// s(n) for the root loop, as a plain double-precision contour integral:
// x = e^{i phi} / c with phi from pi to 3 pi, continuous branch of x^e.
std::complex<double> loop_integral(long c, int q, int n) {
  const int steps = 20000;
  const double e = -static_cast<double>(q - 1) / q;
  std::complex<double> acc = 0;
  for (int s = 0; s <= steps; ++s) {
    const double phi = M_PI + 2 * M_PI * s / steps;
    const std::complex<double> x = std::polar(1.0 / c, phi);
    const std::complex<double> dx = std::complex<double>(0, 1) * x;
    const std::complex<double> xe = std::polar(std::pow(1.0 / c, e), e * phi);
    const std::complex<double> f = std::pow((double(c) * x + 1.0) * ((c + 1.0) * x + 1.0) / x, n) * xe * dx;
    const double w = (s == 0 || s == steps) ? 1 : (s % 2 == 1 ? 4 : 2);
    acc += w * f;
  }
  return acc * (2 * M_PI / steps / 3);
}

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("binomial power sums satisfy the classical identities") {
    for (long n = 0; n <= 40; ++n) {
      CHECK(binomial_power_sum(1, n) == Integer(1) << n);
      CHECK(binomial_power_sum(2, n) == binom(2 * n, n));
    }
    const long franel[] = {1, 2, 10, 56, 346, 2252, 15184};
    for (long n = 0; n < 7; ++n) CHECK(binomial_power_sum(3, n) == franel[n]);
    const RationalSequence s = binomial_power_sums(4, 10);
    CHECK(s.size() == 11);
    CHECK(s.at(10) == binomial_power_sum(4, 10));
    CHECK(binomial_row(5) == std::vector<Integer>{1, 5, 10, 10, 5, 1});
  }

  TEST_CASE("potential matches its defining sums") {
    CHECK(potential(0, 0) == 0);
    CHECK(potential(1, 1) == Rational(3, 2));
    for (long n = 0; n <= 25; ++n) {
      const auto row = potential_row(n);
      REQUIRE(row.size() == static_cast<std::size_t>(n + 1));
      for (long k = 0; k <= n; ++k) CHECK(row[static_cast<std::size_t>(k)] == potential_direct(n, k));
    }
    const PotentialTable t(12);
    CHECK(t.at(12, 5) == potential_direct(12, 5));
    CHECK_THROWS_AS(potential(3, 4), DomainError);
    CHECK_THROWS_AS(t.at(13, 0), OutOfRange);
  }

  TEST_CASE("potential converges to zeta(2) uniformly in k") {
    const BigReal z = zeta2(30);
    double previous = INFINITY;
    for (long n = 10; n <= 160; n *= 2) {
      double worst = 0;
      for (const auto& c : potential_row(n)) worst = std::max(worst, std::fabs((BigReal(c, 30) - z).to_double()));
      CHECK(worst < 3.0 / (double(n) * n));
      CHECK(worst < previous);
      previous = worst;
    }
  }

  TEST_CASE("the WZ form telescopes into the potential for 0 <= k < n <= 40") {
    const auto r = apery::testing::wz_telescoping(40);
    CHECK(r.total == 40 * 41 / 2);
    CHECK_MESSAGE(r.ok(), r.first_failure);
    CHECK_THROWS_AS(wz_form_components(3, 3), DomainError);
  }

  TEST_CASE("weighted sums agree with a direct evaluation") {
    CHECK(weighted_sum(3, 0) == 0);
    CHECK(weighted_sum(3, 1) == Rational(7, 2));
    const PotentialTable t(15);
    for (int d = 1; d <= 4; ++d) {
      for (long n = 0; n <= 15; ++n) {
        Rational direct = 0;
        for (long k = 0; k <= n; ++k) {
          Integer p;
          mpz_pow_ui(p.get_mpz_t(), binom(n, k).get_mpz_t(), static_cast<unsigned long>(d));
          direct += p * potential_direct(n, k);
        }
        CHECK(weighted_sum(d, n) == direct);
        CHECK(weighted_sum(d, n, t) == direct);
      }
    }
  }

  TEST_CASE("family polynomial powers and terms") {
    CHECK(family_denominator(FamilyKind::kCubic) == 3);
    CHECK(family_denominator(FamilyKind::kQuadratic) == 2);
    // ((2x+1)(3x+1))^2 = (6x^2+5x+1)^2
    CHECK(family_polynomial_power(2, 2) == std::vector<Integer>{1, 10, 37, 60, 36});
    const FamilySpec unit{FamilyKind::kQuadratic, 1, FamilyContour::kUnitCircle};
    CHECK(family_terms(unit, 3).at(1) == Rational(8, 3));
  }

  TEST_CASE("root-loop terms are proportional to the contour integral") {
    for (const auto kind : {FamilyKind::kCubic, FamilyKind::kQuadratic}) {
      for (long c : {1L, 2L, 5L}) {
        const int q = family_denominator(kind);
        const RationalSequence s = family_terms(FamilySpec{kind, c}, 6);
        std::complex<double> ratio0;
        for (int n = 1; n <= 6; ++n) {
          const std::complex<double> ratio = loop_integral(c, q, n) / mpq_get_d(s.at(n).get_mpq_t());
          if (n == 1) ratio0 = ratio;
          CHECK(std::abs(ratio - ratio0) < 1e-6 * std::abs(ratio0));
        }
      }
    }
  }
}
