#include "cdalg/repro.hpp"

#include "doctest.h"

using namespace cdalg;

TEST_CASE("every worked example passes") {
  const auto results = run_repro(42);
  REQUIRE(results.size() == 10);
  for (const auto& r : results) {
    INFO(r.id << " " << r.detail);
    CHECK(r.passed);
  }
  CHECK(results.front().id == "R1");
  CHECK(results.back().id == "R10");
}

TEST_CASE("a single case and unknown cases") {
  const auto r9 = run_repro(42, std::string("R9"));
  REQUIRE(r9.size() == 1);
  CHECK(r9[0].passed);
  CHECK(r9[0].mode == "exact");
  CHECK_THROWS_AS(run_repro(42, std::string("R11")), std::invalid_argument);
}

TEST_CASE("results are deterministic for a seed") {
  const auto a = run_repro(7, std::string("R4"));
  const auto b = run_repro(7, std::string("R4"));
  CHECK(a[0].detail == b[0].detail);
}

TEST_CASE("a relabelled sedenion basis fails the zero-divisor case") {
  CHECK(sedenion_zero_divisor_check(BasisConvention::doubled).passed);
  const auto tampered = sedenion_zero_divisor_check(BasisConvention::bit_reversed);
  CHECK_FALSE(tampered.passed);
  CHECK(tampered.detail.find("failed") != std::string::npos);
}

TEST_CASE("report formats") {
  const auto results = run_repro(42, std::string("R1"));
  const auto line = format_result_line(results[0]);
  CHECK(line.rfind("R1\tsedenion-zero-divisors\texact\tPASS", 0) == 0);
  const auto j = results_to_json(results, 42);
  CHECK(j["seed"] == 42);
  CHECK(j["cases"][0]["passed"] == true);
}
