#include "doctest.h"
#include "walks/surd.hpp"

using namespace walks;

TEST_CASE("square-free canonical form") {
  SurdConstant a(Rational(1), Rational(8), -2);
  CHECK(a.q() == 2);
  CHECK(a.radicand() == 2);
  SurdConstant b(Rational(1), make_rational(1, 6), -2);
  CHECK(b.q() == Rational(1, 6));
  CHECK(b.radicand() == 6);
  CHECK(SurdConstant(Rational(3), Rational(36), 0) == SurdConstant(Rational(18), Rational(1), 0));
  CHECK(SurdConstant::zero(-2) == SurdConstant::zero(-3));
  auto [m, f] = square_free_split(BigInt(2 * 2 * 3 * 3 * 3 * 7));
  CHECK(m == 6);
  CHECK(f == 21);
}

TEST_CASE("rendering") {
  CHECK(SurdConstant(Rational(4), Rational(1), -2).to_string() == "4/π");
  CHECK(SurdConstant(Rational(1), Rational(6), -2).to_string() == "√6/π");
  CHECK(SurdConstant(Rational(8, 3), Rational(1), -2).to_string() == "8/(3π)");
  CHECK(SurdConstant(Rational(605, 512), Rational(6), -2).to_string() == "605√6/(512π)");
  CHECK(SurdConstant(Rational(-17, 16), Rational(6), -2).to_string() == "-17√6/(16π)");
  CHECK(SurdConstant(Rational(4), Rational(2), -3).to_string() == "4√2·π^{-3/2}");
  CHECK(SurdConstant(Rational(3), Rational(1), -4).to_string() == "3·π^{-2}");
  CHECK(SurdConstant(Rational(1, 2), Rational(3), 0).to_string() == "√3/2");
  CHECK(SurdConstant::zero().to_string() == "0");
}

TEST_CASE("arithmetic") {
  SurdConstant a(Rational(1), Rational(6), -2), b(Rational(-17, 16), Rational(6), -2);
  CHECK((a + b) == SurdConstant(Rational(-1, 16), Rational(6), -2));
  CHECK_THROWS_AS(a + SurdConstant(Rational(1), Rational(2), -2), std::domain_error);
  CHECK((a + SurdConstant::zero(-2)) == a);
  CHECK((a * SurdConstant(Rational(1), Rational(6), 0)) == SurdConstant(Rational(6), Rational(1), -2));
  CHECK((a * Rational(0)).is_zero());
}

TEST_CASE("decimal rendering") {
  CHECK(SurdConstant(Rational(4), Rational(1), -2).decimal(6) == "1.27324");
  CHECK(SurdConstant(Rational(4), Rational(2), -3).decimal(8) == "1.0158982");
  CHECK(SurdConstant(Rational(1), Rational(1), 2).decimal(10) == "3.141592654");
}
