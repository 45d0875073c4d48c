#include "doctest.h"

#include <cmath>

#include "apery/bigreal.hpp"
#include "apery/constants.hpp"
#include "apery/errors.hpp"
#include "apery/recurrence.hpp"
#include "test_support.hpp"

using namespace apery;
using apery::testing::agreement;
using apery::testing::mpfr_oracle;

TEST_SUITE("bigreal") {
  TEST_CASE("parsing and printing round-trip at the declared precision") {
    const BigReal x = BigReal::parse("-1.25e-3", 10);
    CHECK(x.to_string(3) == "-0.00125");
    CHECK(BigReal::parse("3.14159", 6).to_string() == "3.14159");
    CHECK(BigReal(Rational(1, 3), 12).to_string() == "0.333333333333");
    CHECK(BigReal(Rational(2, 3), 1).to_string() == "0.7");
    CHECK_THROWS_AS(BigReal::parse("1.2.3", 10), DomainError);
    CHECK_THROWS_AS(BigReal::parse("", 10), DomainError);
  }

  TEST_CASE("binary operations keep the smaller precision") {
    const BigReal a(Rational(1, 7), 50), b(Rational(1, 7), 20);
    CHECK((a + b).digits() == 20);
    CHECK((a * a).digits() == 50);
    CHECK(a.with_digits(10).to_string() == "0.1428571429");
  }

  TEST_CASE("log10_abs and round_to_integer handle huge magnitudes") {
    Integer huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 500);
    const BigReal h(huge, 30);
    CHECK(h.log10_abs() == doctest::Approx(500.0));
    CHECK(BigReal(Rational(7, 2), 10).round_to_integer() == 4);
    CHECK(std::isinf(BigReal(10).log10_abs()));
    CHECK(pow10_neg(40, 50).log10_abs() == doctest::Approx(-40.0));
  }

  TEST_CASE("comparison is total on ordinary values") {
    CHECK(BigReal(1L, 10) < BigReal(2L, 10));
    CHECK(BigReal(Rational(1, 2), 10) == BigReal::parse("0.5", 10));
    CHECK(BigReal(-3L, 10).abs() == BigReal(3L, 10));
  }
}

TEST_SUITE("constants") {
  TEST_CASE("pi agrees with MPFR from both arctangent formulas") {
    for (int digits : {10, 20, 100, 400}) {
      const BigReal ref = mpfr_oracle(digits, [](mpfr_ptr r) { mpfr_const_pi(r, MPFR_RNDN); });
      CHECK(agreement(pi(digits, MachinFormula::kMachin), ref) >= digits);
      CHECK(agreement(pi(digits, MachinFormula::kGauss), ref) >= digits);
    }
    CHECK(pi(20).to_string() == "3.1415926535897932385");
  }

  TEST_CASE("zeta2 and zeta3 agree with MPFR") {
    for (int digits : {10, 60, 200}) {
      const BigReal z2 = mpfr_oracle(digits, [](mpfr_ptr r) { mpfr_zeta_ui(r, 2, MPFR_RNDN); });
      const BigReal z3 = mpfr_oracle(digits, [](mpfr_ptr r) { mpfr_zeta_ui(r, 3, MPFR_RNDN); });
      CHECK(agreement(zeta2(digits), z2) >= digits);
      CHECK(agreement(zeta3(digits), z3) >= digits);
      CHECK(agreement(zeta3(digits, Zeta3Depth::kShallow), z3) >= digits);
    }
    CHECK(zeta2(10).to_string() == "1.644934067");
    CHECK(zeta3(10).to_string() == "1.202056903");
    CHECK(zeta3_terms_used(50) > 0);
  }

  TEST_CASE("roots, logarithms and arctangents agree with MPFR") {
    const int digits = 80;
    const BigReal x(Rational(18), digits);
    const BigReal cbrt = mpfr_oracle(digits, [&](mpfr_ptr r) { mpfr_rootn_ui(r, x.raw(), 3, MPFR_RNDN); });
    CHECK(agreement(nth_root(x, 3, digits), cbrt) >= digits);
    CHECK(nth_root(BigReal(18L, 10), 3, 10).to_string() == "2.620741394");
    const BigReal s = mpfr_oracle(digits, [&](mpfr_ptr r) { mpfr_sqrt(r, x.raw(), MPFR_RNDN); });
    CHECK(agreement(sqrt(x, digits), s) >= digits);
    for (const Rational q : {Rational(1, 1000), Rational(2), Rational(10), Rational(123456789)}) {
      const BigReal v(q, digits);
      const BigReal ref = mpfr_oracle(digits, [&](mpfr_ptr r) { mpfr_log(r, v.raw(), MPFR_RNDN); });
      CHECK(agreement(log(v, digits).abs(), ref.abs()) >= digits - 1);
    }
    const BigReal inv(Rational(1, 239), digits);
    const BigReal at = mpfr_oracle(digits, [&](mpfr_ptr r) { mpfr_atan(r, inv.raw(), MPFR_RNDN); });
    CHECK(agreement(atan_inverse(239, digits), at) >= digits);
  }

  TEST_CASE("domain checks") {
    CHECK_THROWS_AS(nth_root(BigReal(-1L, 10), 3, 10), DomainError);
    CHECK_THROWS_AS(log(BigReal(0L, 10), 10), DomainError);
    CHECK_THROWS_AS(sqrt(BigReal(-2L, 10), 10), DomainError);
  }
}
