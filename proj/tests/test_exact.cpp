#include "doctest.h"
#include "walks/laurent_poly.hpp"

#include <random>

using namespace walks;

TEST_CASE("rationals are canonical") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("gaussian rationals") {
  GaussianRational a(Rational(1, 2), Rational(3));
  CHECK(to_string(a) == "1/2+3i");
  CHECK(a.conj().conj() == a);
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(to_string(GaussianRational::i_unit() * GaussianRational::i_unit()) == "-1");
  CHECK(to_string(GaussianRational(Rational(0), Rational(-2))) == "-2i");
}

TEST_CASE("binomial and factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binomial(Rational(5), 7) == 0);
}

TEST_CASE("graded lex order") {
  GradedLexLess less;
  CHECK(less({0, 0}, {1, 0}));
  CHECK(less({1, 0}, {0, 1}));
  CHECK(less({0, 1}, {2, 0}));
  CHECK_FALSE(less({0, 1}, {0, 1}));
}

TEST_CASE("laurent evaluation at sign vectors") {
  LaurentPoly p = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 0, -1) + LaurentPoly::variable(2, 1) +
                  LaurentPoly::variable(2, 1, -1);
  const int ones[] = {1, 1}, mixed[] = {1, -1};
  CHECK(laurent_eval_signs(p, ones) == 4);
  CHECK(laurent_eval_signs(p, mixed) == 0);
  const int bad[] = {1, 1, 1};
  CHECK_THROWS_AS(laurent_eval_signs(p, bad), DimensionError);
  const int notsign[] = {1, 2};
  CHECK_THROWS(laurent_eval_signs(p, notsign));
  CHECK(p.to_string() == "y^-1 + x^-1 + x + y");
}

namespace {

LaurentPoly random_poly(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), n(0, 4);
  LaurentPoly p(d);
  const int terms = n(rng);
  for (int i = 0; i < terms; ++i) {
    Exponents x(d);
    for (auto& v : x) v = e(rng);
    p.add_term(x, make_rational(c(rng), 1 + std::abs(c(rng))));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent ring axioms on random instances") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 3;
    auto a = random_poly(rng, d), b = random_poly(rng, d), c = random_poly(rng, d);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
  }
}

TEST_CASE("sign map and shift") {
  auto xy = LaurentPoly::monomial({1, 1});
  const int s[] = {-1, 1};
  CHECK(xy.apply_sign_map(s) == LaurentPoly::monomial({-1, 1}));
  const int sh[] = {2, 0};
  CHECK(xy.shifted(sh) == LaurentPoly::monomial({3, 1}));
}
