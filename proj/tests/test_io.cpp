#include "doctest.h"

#include "apery/errors.hpp"
#include "apery/io.hpp"

using namespace apery;

namespace {

template <class F>
std::pair<int, int> where(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("recurrence files round-trip") {
    const std::string text = format_recurrence(zeta3_recurrence());
    CHECK(text ==
          "{\"order\":2,\"coeffs\":[[\"1\",\"3\",\"3\",\"1\"],[\"-117\",\"-231\",\"-153\",\"-34\"],"
          "[\"8\",\"12\",\"6\",\"1\"]]}\n");
    CHECK(parse_recurrence(text) == zeta3_recurrence());
    const PRecurrence big({PolyInt(std::vector<Integer>{Integer("-98765432109876543210987654321")}), PolyInt{1}});
    CHECK(parse_recurrence(format_recurrence(big)) == big);
  }

  TEST_CASE("recurrence parse errors carry line and column") {
    CHECK(where([] { parse_recurrence("{\"order\": 1,\n \"coeffs\": [[\"1\"], [\"1\"]\n"); }).first == 3);
    CHECK(where([] { parse_recurrence("{\"order\": 2,\n \"coeffs\": [[\"1\"], [\"x\"], [\"1\"]]}"); }) ==
          std::pair{2, 21});
    CHECK(where([] { parse_recurrence("{\"order\": 2, \"coeffs\": [[\"1\"], [\"1\"]]}"); }) == std::pair{1, 14});
    CHECK(where([] { parse_recurrence("{\"coeffs\": [[\"1\"], [\"1\"]]}"); }).first == 1);
    CHECK(where([] { parse_recurrence("[1, 2]"); }) == std::pair{1, 1});
    CHECK(where([] { parse_recurrence("{\"order\": 1, \"coeffs\": [[\"1\"], [1]]}"); }).first == 1);
    CHECK_THROWS_AS(parse_recurrence("{\"order\": 1, \"coeffs\": [[\"1\"], [\"0\"]]}"), ParseError);
  }

  TEST_CASE("sequence files") {
    const auto s = parse_sequence("# start=2\n# a comment\n1\n\n-3/6\n  7  \n");
    CHECK(s.start_index == 2);
    REQUIRE(s.size() == 3);
    CHECK(s.at(3) == Rational(-1, 2));
    CHECK(s.at(4) == 7);
    CHECK(parse_sequence(format_sequence(s)).terms == s.terms);
    CHECK(where([] { parse_sequence("1\n2\n3/0\n"); }) == std::pair{3, 3});
    CHECK(where([] { parse_sequence("1\n  2x\n"); }) == std::pair{2, 4});
    CHECK(where([] { parse_sequence("1\n# start=3\n"); }).first == 2);
    CHECK(where([] { parse_sequence("# start=-1\n"); }).first == 1);
  }

  TEST_CASE("decimal values carry their significant digits") {
    const BigReal v = parse_value("  0.0012345\n");
    CHECK(v.digits() == 5);
    CHECK(v.to_string() == "0.0012345");
    CHECK(parse_value("-3.14159265358979323846").digits() == 21);
    CHECK(parse_value("2.5e3").to_double() == 2500.0);
    CHECK(where([] { parse_value("1.2x"); }) == std::pair{1, 4});
    CHECK_THROWS_AS(parse_value("   "), ParseError);
  }

  TEST_CASE("rational lists") {
    CHECK(parse_rational_list("0,6") == std::vector<Rational>{0, 6});
    CHECK(parse_rational_list(" 1/2 , -3") == std::vector<Rational>{Rational(1, 2), -3});
    CHECK(where([] { parse_rational_list("1,a"); }) == std::pair{1, 3});
  }

  TEST_CASE("unreadable files") { CHECK_THROWS_AS(read_file("/nonexistent/file"), Error); }
}
