#include "doctest.h"
#include "models.hpp"
#include "walks/enumerate.hpp"

#include <algorithm>

using namespace walks;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("hand counts") {
  auto t = count_walks(models::get(models::nsew), 2);
  CHECK(t.totals() == big({1, 2, 6}));
  CHECK(t.excursions() == big({1, 0, 2}));
  CHECK(totals(count_walks(models::get(models::line), 2))[2] == 2);
  CHECK(totals(count_walks(models::get(models::eight), 1))[1] == 3);
  CHECK(endpoint_series(t, 0) == LaurentPoly::constant(2, Rational(1)));
  CHECK(endpoint_series(t, 1) == LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1));
}

TEST_CASE("independent enumeration oracle to length 12") {
  // Frozen from a dictionary-based enumeration written separately.
  struct Case {
    const char* model;
    std::vector<BigInt> s, e;
  };
  const Case cases[] = {
      {models::nsew, big({1, 2, 6, 18, 60, 200, 700, 2450, 8820, 31752, 116424, 426888, 1585584}),
       big({1, 0, 2, 0, 10, 0, 70, 0, 588, 0, 5544, 0, 56628})},
      {models::six, big({1, 2, 10, 39, 210, 960, 5340, 26250, 148610, 761796, 4360356, 22971102, 132469260}),
       big({1, 0, 2, 0, 18, 0, 255, 0, 4522, 0, 91896, 0, 2047452})},
      {models::eight,
       big({1, 3, 18, 105, 684, 4550, 31340, 219555, 1564080, 11271876, 82059768, 602215614, 4450146624}),
       big({1, 0, 3, 6, 38, 160, 905, 4830, 28308, 166992, 1024758, 6389460, 40724244})},
      {models::cube12,
       big({1, 3, 24, 183, 1620, 14880, 143040, 1412775, 14277900, 146846028, 1532295072, 16180685136,
            172592215488}),
       big({1, 0, 3, 6, 48, 240, 1695, 11550, 87108, 675696, 5482512, 45793440, 393376896})},
  };
  for (const auto& c : cases) {
    auto t = count_walks(models::get(c.model), 12);
    CHECK(t.totals() == c.s);
    CHECK(t.excursions() == c.e);
  }
}

TEST_CASE("table invariants") {
  for (const char* m : {models::nsew, models::six, models::eight, models::cube8}) {
    auto s = models::get(m);
    auto t = count_walks(s, 10);
    CHECK(t.totals()[0] == 1);
    CHECK(t.excursions()[1] == 0);
    for (int n = 1; n <= 10; ++n) {
      CHECK(t.totals()[n] <= static_cast<long>(s.size()) * t.totals()[n - 1]);
      auto p = t.endpoint_series(n);
      CHECK(p.eval_ones() == Rational(t.totals()[n]));
      for (const auto& [e, c] : p.terms()) {
        CHECK(sgn(c) > 0);
        for (int v : e) CHECK((v >= 0 && v <= n));
      }
    }
  }
}

TEST_CASE("excursion parity is observed for the six-step model") {
  auto t = count_walks(models::get(models::six), 40, {.keep_layers = false});
  for (int n = 1; n <= 40; n += 2) CHECK(t.excursions()[n] == 0);
  CHECK_FALSE(t.has_layers());
  CHECK_THROWS_AS(t.endpoint_series(3), std::logic_error);
}

TEST_CASE("coordinate permutation permutes endpoint counts") {
  auto s = models::get(models::cube12);
  RawStepSet raw{3, {}};
  for (auto step : s.steps()) {
    std::rotate(step.begin(), step.begin() + 1, step.end());
    raw.steps.push_back(step);
  }
  auto a = count_walks(s, 6), b = count_walks(validate(raw), 6);
  for (int n = 0; n <= 6; ++n) {
    const auto layer = a.endpoint_series(n);
    for (const auto& [e, c] : layer.terms()) {
      Exponents r = e;
      std::rotate(r.begin(), r.begin() + 1, r.end());
      CHECK(b.count(n, r) == c.get_num());
    }
  }
}

TEST_CASE("serial and parallel DP agree") {
  for (const char* m : {models::six, models::cube12}) {
    auto s = models::get(m);
    auto a = count_walks(s, 15, {.exec = Exec::serial});
    auto b = count_walks(s, 15, {.exec = Exec::parallel});
    CHECK(a.totals() == b.totals());
    CHECK(a.excursions() == b.excursions());
    for (int n = 0; n <= 15; ++n) CHECK(a.endpoint_series(n) == b.endpoint_series(n));
  }
}

TEST_CASE("resource guard") {
  auto s = parse_stepset("1,0,0,0;-1,0,0,0;0,1,0,0;0,-1,0,0;0,0,1,0;0,0,-1,0;0,0,0,1;0,0,0,-1");
  try {
    count_walks(s, 200);
    FAIL("expected refusal");
  } catch (const ResourceLimitError& e) {
    CHECK(e.estimate() == doctest::Approx(dp_cell_estimate(4, 200)));
  }
  CHECK_THROWS_AS(count_walks(models::get(models::nsew), 30, {.cell_budget = 100}), ResourceLimitError);
}
