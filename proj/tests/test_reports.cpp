#include "doctest.h"

#include "apery/errors.hpp"
#include "apery/experiments.hpp"
#include "apery/io.hpp"
#include "schema_check.hpp"

using namespace apery;

namespace {

const nlohmann::json& schema() {
  static const nlohmann::json s = nlohmann::json::parse(read_file(APERY_SCHEMA_PATH));
  return s;
}

void check_schema(const Json& report) {
  const auto errors = apery::testing::validate(nlohmann::json::parse(report.dump()), schema());
  for (const auto& e : errors) FAIL_CHECK(e);
  CHECK(report["empirical"].get<bool>());
}

std::string without_timestamp(Json j) {
  j.erase("timestamp");
  return j.dump();
}

}  // namespace

TEST_SUITE("reports") {
  TEST_CASE("zeta3 report") {
    const Json j = to_json(run_zeta3(100, 30));
    check_schema(j);
    CHECK(j["limit_digits"] == "1.20205690315959428539973816151");
    CHECK(j["achieved_digits"] == 30);
    CHECK(j["recurrence"] == recurrence_to_json(zeta3_recurrence()));
  }

  TEST_CASE("cs report for d = 3") {
    const CsReport r = run_cs(3, 200, 40);
    CHECK(r.recurrence.order() == 2);
    CHECK(r.initial_b == std::vector<Rational>{0, 1});
    REQUIRE(r.identified);
    CHECK(r.identified->name == "zeta2");
    CHECK(r.identified->coefficient == Rational(1, 4));
    CHECK(r.identified->constant == 0);
    CHECK(r.matches_expected);
    CHECK(r.convergence.max_decay_ratio() < 0.9);
    const Json j = to_json(r);
    check_schema(j);
    CHECK(j["identified"]["basis"] == "zeta2");
    CHECK(j["identified"]["coefficient"] == "1/4");
  }

  TEST_CASE("higher-order initial vectors satisfy the surviving relations") {
    const CsReport r = run_cs(5, 200, 40);
    CHECK(r.recurrence.order() == 3);
    REQUIRE(r.initial_b.size() == 3);
    CHECK(r.initial_b[0] == 0);
    CHECK(r.initial_b[1] == 1);
    CHECK(r.matches_expected);
    CHECK_FALSE(r.initial_method.empty());
    CHECK_THROWS_AS(cs_initial_vector(PRecurrence({PolyInt{1}, PolyInt{1}}), binomial_power_sums(1, 5)),
                    DomainError);
  }

  TEST_CASE("theorem1 report") {
    const Theorem1Report small = run_theorem1(3, 10, 30);
    REQUIRE_FALSE(small.head.empty());
    CHECK(small.head[0] == 0);
    const Json j = to_json(small);
    check_schema(j);
    CHECK(j["details"]["head"][0] == "0");
    for (int d : {1, 3}) {
      const Theorem1Report r = run_theorem1(d, 200, 30);
      CHECK(r.error_at_N.log10_abs() < -8);
      CHECK(r.geometric);
    }
  }

  TEST_CASE("family reports and sweeps") {
    const FamilyReport r = run_family(FamilySpec{FamilyKind::kCubic, 3}, 200, 40);
    check_schema(to_json(r, 200, 40));
    const auto sweep = run_family_sweep(FamilyKind::kQuadratic, 1, 3, 200, 40, 2);
    REQUIRE(sweep.size() == 3);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      CHECK(sweep[i].c == static_cast<long>(i + 1));
      REQUIRE(sweep[i].report);
      CHECK(sweep[i].report->polynomial_matches);
    }
    const Json j = to_json(sweep, FamilyKind::kQuadratic, 200, 40);
    check_schema(j);
    CHECK(j["details"]["table"].size() == 3);
    CHECK_THROWS_AS(run_family_sweep(FamilyKind::kCubic, 3, 2, 100, 40, 1), DomainError);
  }

  TEST_CASE("reports are reproducible apart from the timestamp") {
    CHECK(without_timestamp(to_json(run_zeta3(200, 40))) == without_timestamp(to_json(run_zeta3(200, 40))));
    const auto a = run_family_sweep(FamilyKind::kCubic, 2, 4, 150, 40, 3);
    const auto b = run_family_sweep(FamilyKind::kCubic, 2, 4, 150, 40, 1);
    CHECK(without_timestamp(to_json(a, FamilyKind::kCubic, 150, 40)) ==
          without_timestamp(to_json(b, FamilyKind::kCubic, 150, 40)));
  }
}
