#include "doctest.h"
#include "models.hpp"
#include "walks/enumerate.hpp"
#include "walks/holonomic.hpp"

#ifndef WALKS_DATA_DIR
#define WALKS_DATA_DIR "data"
#endif

using namespace walks;

namespace {

std::string data(const std::string& rel) { return std::string(WALKS_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("polynomial helpers") {
  IntPoly p{BigInt(1), BigInt(0), BigInt(2)};
  CHECK(degree(p) == 2);
  CHECK(eval(p, 3) == 19);
  CHECK(degree(IntPoly{BigInt(0)}) == -1);
}

TEST_CASE("planar operators annihilate the DP series through order 50") {
  for (const char* name : {"nsew", "diagonal", "six_step", "eight_step"}) {
    auto ode = load_ode(data(std::string("ode/") + name + ".json"));
    auto t = count_walks(parse_stepset(ode.model), 50, {.keep_layers = false});
    auto r = check_ode(ode, t.totals());
    CHECK_MESSAGE(r.ok, name);
    CHECK(r.checked_through >= 50 - 8);
  }
}

TEST_CASE("axis-step operators in three and four dimensions") {
  auto d3 = load_ode(data("ode/simple_3d.json"));
  CHECK(check_ode(d3, count_walks(parse_stepset(d3.model), 40, {.keep_layers = false}).totals()).ok);
  auto d4 = load_ode(data("ode/simple_4d.json"));
  CHECK(check_ode(d4, count_walks(parse_stepset(d4.model), 24, {.keep_layers = false}).totals()).ok);
}

TEST_CASE("perturbed operator is caught") {
  auto ode = load_ode(data("ode/nsew.json"));
  ode.coeffs[1][1] += 1;
  auto r = check_ode(ode, count_walks(models::get(models::nsew), 50, {.keep_layers = false}).totals());
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == 1);
  CHECK(sgn(r.residual) != 0);
}

TEST_CASE("six-step recurrence") {
  auto rec = load_recurrence(data("recurrence/six_step.json"));
  CHECK(rec.span() == 6);
  auto seq = count_walks(models::get(models::six), 66, {.keep_layers = false}).totals();
  auto r = check_recurrence(rec, seq);
  CHECK(r.ok);
  CHECK(r.checked_through == 60);

  auto shifted = rec;
  std::rotate(shifted.coeffs.begin(), shifted.coeffs.begin() + 1, shifted.coeffs.end());
  CHECK_FALSE(check_recurrence(shifted, seq).ok);

  std::vector<BigInt> short_seq(seq.begin(), seq.begin() + 5);
  CHECK_THROWS_AS(check_recurrence(rec, short_seq), std::invalid_argument);
}

TEST_CASE("json parsing") {
  auto ode = parse_ode_json(R"({"order": 1, "coefficients": [[1, "-123456789012345678901234567890"], [0, 1]]})");
  CHECK(ode.order() == 1);
  CHECK(ode.coeffs[0][1] == BigInt("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_ode_json(R"({"order": 2, "coefficients": [[1], [1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ode_json(R"({"coefficients": [[1], [0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ode_json(R"({"coefficients": [[1], ["x"]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_recurrence_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(check_ode(ode, {BigInt(1)}), std::invalid_argument);
}
