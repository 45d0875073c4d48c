#include "doctest.h"

#include "apery/errors.hpp"
#include "apery/guesser.hpp"
#include "apery/sequences.hpp"
#include "property_suites.hpp"

using namespace apery;

namespace {

RationalSequence powers_of_two(std::int64_t count) {
  std::vector<Rational> v;
  Integer p = 1;
  for (std::int64_t n = 0; n < count; ++n, p *= 2) v.emplace_back(p);
  return RationalSequence(0, std::move(v));
}

}  // namespace

TEST_SUITE("guesser") {
  TEST_CASE("2^n satisfies a first-order recurrence") {
    const auto rec = guess_recurrence(powers_of_two(60), 2, 2);
    REQUIRE(rec);
    CHECK(*rec == PRecurrence({PolyInt{-2}, PolyInt{1}}));
  }

  TEST_CASE("Apery's b_n recovers the zeta(3) recurrence") {
    const RationalSequence b = iterate(zeta3_recurrence(), make_sequence(0, {1, 5}), 80);
    CHECK(minimal_recurrence(b, 2, 4) == zeta3_recurrence());
  }

  TEST_CASE("Franel numbers satisfy a second-order recurrence of degree 2") {
    // (n+2)^2 u(n+2) = (7n^2+21n+16) u(n+1) + 8(n+1)^2 u(n)
    const PRecurrence expected({PolyInt{-8, -16, -8}, PolyInt{-16, -21, -7}, PolyInt{4, 4, 1}});
    CHECK(minimal_recurrence(binomial_power_sums(3, 100), 3, 6) == expected);
  }

  TEST_CASE("the search is minimal in order before degree") {
    // (n+1) u(n+1) = 2 (2n+1) u(n): central binomials, order 1 degree 1.
    const RationalSequence s = binomial_power_sums(2, 60);
    const auto rec = minimal_recurrence(s, 3, 3);
    CHECK(rec.order() == 1);
    CHECK(rec.max_degree() == 1);
  }

  TEST_CASE("caps and term counts are enforced") {
    CHECK(guess_terms_required(2, 3) == 3 * 4 + 2 + 20);
    CHECK_THROWS_AS(guess_recurrence(powers_of_two(10), 3, 3), InsufficientTerms);
    CHECK_THROWS_AS(minimal_recurrence(binomial_power_sums(5, 40), 1, 2), NotFound);
    CHECK_FALSE(guess_recurrence(binomial_power_sums(5, 40), 1, 2));
    CHECK(guess_cell(powers_of_two(40), 1, 0));
    CHECK_FALSE(guess_cell(binomial_power_sums(3, 60), 1, 3));
  }

  TEST_CASE("round-trip on 50 random recurrences of order <= 3 and degree <= 3") {
    const auto r = apery::testing::guesser_roundtrip(50, 20260101);
    CHECK(r.total == 50);
    CHECK_MESSAGE(r.ok(), r.first_failure);
  }
}
