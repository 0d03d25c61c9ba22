#include "doctest.h"
#include "walks/theta_series.hpp"

#include <random>

using namespace walks;

TEST_CASE("exp circle embedding") {
  CHECK(theta_exp_circle(1, 2).to_string() == "1 + i*t1 - 1/2*t1^2");
  CHECK(theta_exp_circle(-1, 1).to_string() == "-1 - i*t1");
  const int e4[] = {4};
  CHECK(theta_exp_circle(1, 4).coeff(e4) == GaussianRational(Rational(1, 24)));
}

TEST_CASE("log1p") {
  CHECK(theta_log1p(ThetaSeries(1, 3)).is_zero());
  auto t = ThetaSeries::monomial(3, {1}, GaussianRational(1));
  CHECK(theta_log1p(t).to_string() == "t1 - 1/2*t1^2 + 1/3*t1^3");
  auto it = ThetaSeries::monomial(2, {1}, GaussianRational::i_unit());
  CHECK(theta_log1p(it).to_string() == "i*t1 + 1/2*t1^2");
  CHECK_THROWS_AS(theta_log1p(theta_exp_circle(1, 3)), std::domain_error);
}

TEST_CASE("log1p inverts exp") {
  for (int trunc = 1; trunc <= 8; ++trunc) {
    auto x = ThetaSeries::monomial(trunc, {1, 0}, GaussianRational(1)) +
             ThetaSeries::monomial(trunc, {0, 1}, GaussianRational(Rational(1, 3)));
    auto e = theta_exp(x) - ThetaSeries::constant(2, trunc, GaussianRational(1));
    CHECK(theta_log1p(e) == x);
  }
}

TEST_CASE("second partials") {
  auto sq = ThetaSeries::monomial(2, {2, 0}, GaussianRational(1));
  auto h = theta_second_partials_at_zero(sq);
  CHECK(h[0][0] == GaussianRational(2));
  CHECK(h[0][1].is_zero());
  auto mix = ThetaSeries::monomial(2, {1, 1}, GaussianRational(1));
  h = theta_second_partials_at_zero(mix);
  CHECK(h[0][1] == GaussianRational(1));
  CHECK(h[1][0] == GaussianRational(1));
  CHECK_THROWS(theta_second_partials_at_zero(ThetaSeries(2, 1)));
}

namespace {

ThetaSeries random_series(std::mt19937& rng, int d, int deg) {
  std::uniform_int_distribution<int> c(-4, 4), k(0, 5);
  ThetaSeries s(d, deg);
  for (int i = 0; i < 6; ++i) {
    Exponents e(d, 0);
    int left = k(rng) % (deg + 1);
    for (int j = 0; j < d && left > 0; ++j) {
      int take = (j == d - 1) ? left : left / 2;
      e[j] = take;
      left -= take;
    }
    s.set_coeff(e, GaussianRational(make_rational(c(rng), 1 + std::abs(c(rng))), Rational(c(rng))));
  }
  return s;
}

}  // namespace

TEST_CASE("theta ring axioms and kernel agreement") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 3, deg = 2 + trial % 5;
    auto a = random_series(rng, d, deg), b = random_series(rng, d, deg), c = random_series(rng, d, deg);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.multiply(b, Exec::serial) == a.multiply(b, Exec::parallel));
    // Truncating after the product equals the product of truncations.
    CHECK((a * b).truncated(deg - 1) == a.truncated(deg - 1) * b.truncated(deg - 1));
  }
}

TEST_CASE("diagonal operator closed form matches repeated application") {
  std::mt19937 rng(5);
  const Rational inv[] = {Rational(3, 2), Rational(-1, 3)};
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_series(rng, 2, 8);
    ThetaSeries cur = s;
    for (unsigned m = 0; m <= 4; ++m) {
      CHECK(cur.constant_term() == diagonal_operator_power_at_zero(s, inv, m));
      cur = apply_diagonal_operator(cur, inv);
    }
  }
}
