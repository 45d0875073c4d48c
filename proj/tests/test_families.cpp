#include "doctest.h"

#include <cmath>

#include "apery/constants.hpp"
#include "apery/errors.hpp"
#include "apery/families.hpp"
#include "apery/guesser.hpp"
#include "test_support.hpp"

using namespace apery;
using apery::testing::agreement;

TEST_SUITE("families") {
  TEST_CASE("cubic field arithmetic") {
    const long c = 5;
    const auto t = CubicFieldElement::theta(c);
    CHECK(t * t * t == CubicFieldElement(c, Rational(6, 5)));
    const CubicFieldElement x(c, Rational(2, 3), -1, 4);
    CHECK(x * x.inverse() == CubicFieldElement(c, 1));
    CHECK((x - x).is_zero());
    CHECK((x + x) / x == CubicFieldElement(c, 2));
    CHECK_THROWS_AS(CubicFieldElement(c, 0).inverse(), NonInvertibleDenominator);
    CHECK_THROWS_AS(CubicFieldElement(0, 1), DomainError);
    const BigReal v = t.value(40);
    CHECK(agreement(v * v * v, BigReal(Rational(6, 5), 40)) >= 39);
  }

  TEST_CASE("expected polynomials") {
    CHECK(cubic_poly(2) == PolyInt{64, 720, 2052, 135});
    CHECK(cubic_poly(3) == PolyInt{64, 1008, 3996, 189});
    CHECK(quadratic_poly(3) == PolyInt{9, 84, 4});
  }

  TEST_CASE("the root expression is exactly a root for c = 1..50") {
    for (long c = 1; c <= 50; ++c) CHECK(verify_root_identity(c));
  }

  TEST_CASE("real_root agrees with the field element's value for c = 1..10") {
    for (long c = 1; c <= 10; ++c) {
      const BigReal r = real_root(c, 60);
      CHECK(agreement(r, root_element(c).value(60)) >= 59);
    }
  }

  TEST_CASE("quadratic closed form is a root of quadratic_poly") {
    for (long c = 1; c <= 10; ++c) {
      const BigReal x = quadratic_closed_form(c, 50);
      const double approx = -3.0 * c - 1.5 - 3.0 * std::sqrt(double(c) * c + c);
      CHECK(x.to_double() == doctest::Approx(approx));
      const PolyInt poly = quadratic_poly(c);
      const auto& k = poly.coeffs();
      const BigReal p = BigReal(k[0], 50) + BigReal(k[1], 50) * x + BigReal(k[2], 50) * x * x;
      CHECK(p.log10_abs() < -45);
    }
  }

  TEST_CASE("kappa is below 2 from c = 4 and decreases") {
    CHECK(kappa(4, 30).value < BigReal(2L, 30));
    CHECK(kappa(3, 30).warning);
    CHECK_FALSE(kappa(4, 30).warning);
    BigReal previous = kappa(4, 30).value;
    for (long c = 5; c <= 1000; ++c) {
      const BigReal k = kappa(c, 30).value;
      CHECK(k < previous);
      previous = k;
    }
    CHECK(kappa(4, 30).value.to_double() == doctest::Approx(1.92194).epsilon(1e-4));
  }

  TEST_CASE("proportional ignores content and sign") {
    CHECK(proportional(PolyInt{2, 4}, PolyInt{-1, -2}));
    CHECK_FALSE(proportional(PolyInt{2, 4}, PolyInt{1, 3}));
    CHECK_FALSE(proportional(PolyInt{}, PolyInt{1}));
  }

  TEST_CASE("cubic family c = 2 end to end") {
    const auto r = run_family(FamilySpec{FamilyKind::kCubic, 2}, 300, 50);
    REQUIRE(r.recurrence);
    CHECK(r.recurrence->order() == 2);
    CHECK(r.polynomial_matches);
    CHECK(r.closed_form_agrees);
    REQUIRE(r.identified);
    CHECK(proportional(r.identified->polynomial, PolyInt{64, 720, 2052, 135}));
    REQUIRE(r.root_identity);
    CHECK(*r.root_identity);
    REQUIRE(r.mu_estimate);
    CHECK(r.mu_estimate->to_double() > 2.0);
  }

  TEST_CASE("quadratic family c = 3 end to end") {
    const auto r = run_family(FamilySpec{FamilyKind::kQuadratic, 3}, 300, 50);
    CHECK(r.polynomial_matches);
    CHECK(r.closed_form_agrees);
    REQUIRE(r.convergence);
    const BigReal expect = BigReal(Rational(-21, 2), 60) - BigReal(3L, 60) * sqrt(BigReal(12L, 60), 60);
    CHECK(agreement(r.convergence->limit, expect) >= 50);
    CHECK_FALSE(r.kappa);
  }

  TEST_CASE("the unit-circle contour needs a third-order recurrence") {
    const FamilySpec spec{FamilyKind::kCubic, 2, FamilyContour::kUnitCircle};
    const auto rec = minimal_recurrence(family_terms(spec, 120), 3, 6);
    CHECK(rec.order() == 3);
    const auto loop = minimal_recurrence(family_terms(FamilySpec{FamilyKind::kCubic, 2}, 120), 3, 6);
    CHECK(loop.order() == 2);
  }
}
