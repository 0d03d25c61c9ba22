#include "doctest.h"
#include "walks/stepset.hpp"

using namespace walks;

namespace {

ValidationError validation_error(const std::string& text) {
  try {
    parse_stepset(text);
  } catch (const ValidationError& e) {
    return e;
  }
  FAIL("expected a validation error for " << text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("validation diagnostics") {
  CHECK_NOTHROW(parse_stepset("N,S,E,W"));
  auto e = validation_error("N,E,W");
  CHECK(e.kind() == ValidationFailure::NotSymmetric);
  CHECK(e.axis() == 2);
  CHECK(*e.witness() == Exponents{0, 1});
  e = validation_error("E,W");
  CHECK(e.kind() == ValidationFailure::NoForwardStep);
  CHECK(e.axis() == 2);
  CHECK(validation_error("N,E").kind() == ValidationFailure::NotSymmetric);
  CHECK(validation_error("0,0; 1,0; -1,0").kind() == ValidationFailure::ZeroStepPresent);
  CHECK(validation_error("2,0; -2,0").kind() == ValidationFailure::OutOfRangeEntry);
  CHECK(validation_error("N,S,E,W,N").kind() == ValidationFailure::DuplicateStep);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_raw_stepset("N,S,Q");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_raw_stepset("1,0; 1"), ParseError);
  CHECK_THROWS_AS(parse_raw_stepset("1,x"), ParseError);
  CHECK_THROWS_AS(parse_raw_stepset(""), ParseError);
}

TEST_CASE("inventory") {
  CHECK(inventory(parse_stepset("N,S,E,W")).to_string() == "y^-1 + x^-1 + x + y");
  auto s3 = parse_stepset("1,0,1; 1,0,-1; -1,0,1; -1,0,-1; 0,1,1; 0,1,-1; 0,-1,1; 0,-1,-1");
  LaurentPoly expected = (LaurentPoly::variable(3, 0) + LaurentPoly::variable(3, 1) + LaurentPoly::variable(3, 0, -1) +
                          LaurentPoly::variable(3, 1, -1)) *
                         (LaurentPoly::variable(3, 2) + LaurentPoly::variable(3, 2, -1));
  CHECK(inventory(s3) == expected);
  CHECK(inventory(s3).size() == 8);
}

TEST_CASE("decompose and forward counts") {
  auto nsew = parse_stepset("N,S,E,W");
  auto dec = decompose(nsew, 0);
  CHECK(dec.s1 == LaurentPoly::constant(2, Rational(1)));
  CHECK(dec.s0 == LaurentPoly::variable(2, 1) + LaurentPoly::variable(2, 1, -1));
  CHECK(forward_counts(nsew) == std::vector<long>{1, 1});

  auto six = parse_stepset("N,S,NE,SE,NW,SW");
  CHECK(decompose(six, 0).s1.eval_ones() == 2);
  CHECK(decompose(six, 0).s0.eval_ones() == 2);
  CHECK(forward_counts(six) == std::vector<long>{2, 3});

  auto eight = parse_stepset("N,S,E,W,NE,SE,NW,SW");
  for (int k = 0; k < 2; ++k) CHECK(decompose(eight, k).s1.eval_ones() == 3);

  auto full3 = parse_stepset(
      "1,1,1;1,1,0;1,1,-1;1,0,1;1,0,0;1,0,-1;1,-1,1;1,-1,0;1,-1,-1;0,1,1;0,1,0;0,1,-1;0,0,1;"
      "0,0,-1;0,-1,1;0,-1,0;0,-1,-1;-1,1,1;-1,1,0;-1,1,-1;-1,0,1;-1,0,0;-1,0,-1;-1,-1,1;-1,-1,0;-1,-1,-1");
  CHECK(forward_counts(full3) == std::vector<long>{9, 9, 9});
}

TEST_CASE("inventory is invariant under every sign map") {
  for (const char* text : {"N,S,E,W", "N,S,NE,SE,NW,SW", "1,0,1; 1,0,-1; -1,0,1; -1,0,-1; 0,1,1; 0,1,-1; 0,-1,1; 0,-1,-1"}) {
    auto s = parse_stepset(text);
    auto p = inventory(s);
    for (const auto& sigma : sign_vectors(s.dimension())) CHECK(apply_sign_map(p, sigma) == p);
    for (int k = 0; k < s.dimension(); ++k) {
      auto dec = decompose(s, k);
      long zeros = 0;
      for (const auto& step : s.steps()) zeros += step[k] == 0;
      CHECK(2 * forward_counts(s)[k] + zeros == static_cast<long>(s.size()));
      CHECK(dec.s1.eval_ones() == forward_counts(s)[k]);
    }
  }
}

TEST_CASE("serialize round trip and permutation closure") {
  auto s = parse_stepset("1,0,1; 1,0,-1; -1,0,1; -1,0,-1; 0,1,1; 0,1,-1; 0,-1,1; 0,-1,-1");
  CHECK(parse_stepset(serialize(s)) == s);
  CHECK(parse_stepset(serialize(parse_stepset("N,S,E,W"))) == parse_stepset("N,S,E,W"));
  RawStepSet permuted{3, {}};
  for (auto step : s.steps()) {
    std::swap(step[0], step[2]);
    permuted.steps.push_back(step);
  }
  CHECK_NOTHROW(validate(permuted));
  RawStepSet again{3, s.steps()};
  CHECK(validate(again) == s);
}
