#include <doctest.h>

#include "keller/harness.hpp"
#include "keller/parse.hpp"

using namespace keller;

TEST_CASE("grammar accepts the documented forms") {
  auto R3 = PolyRing::create({"x1", "x2", "x3"});
  Polynomial p = parse_polynomial("x1^2*x2 + x3", R3);
  CHECK(to_string(p) == "x1^2*x2 + x3");

  auto R = PolyRing::create({"x"});
  CHECK(parse_polynomial("(x+1)^2 - (x^2+2*x+1)", R).is_zero());
  CHECK(to_string(parse_polynomial("-3/2*x", R)) == "-3/2*x");
  CHECK(parse_polynomial("3/2*x", R) == parse_polynomial("x", R) * Rational(3, 2));
}

TEST_CASE("parse errors carry positions") {
  auto R = PolyRing::create({"x"});
  try {
    parse_polynomial("x^-1", R);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 2);
    CHECK(e.expected() == "nonnegative integer exponent");
    CHECK(e.found() == "-");
  }

  try {
    parse_polynomial("x + yy", R);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 4);
    CHECK(e.expected() == "a declared variable name");
  }

  CHECK_THROWS_AS(parse_polynomial("x^2^3", R), parse_error);   // non-associative power
  CHECK_THROWS_AS(parse_polynomial("(x+1", R), parse_error);    // unbalanced parenthesis
  CHECK_THROWS_AS(parse_polynomial("x x", R), parse_error);     // implicit multiplication
  CHECK_THROWS_AS(parse_polynomial("", R), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x/2", R), parse_error);     // '/' only in rationals
  CHECK_THROWS_AS(parse_polynomial("1/0", R), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x + $", R), parse_error);
}

TEST_CASE("printer emits canonical descending terms") {
  auto R3 = PolyRing::create({"x1", "x2", "x3"});
  CHECK(to_string(parse_polynomial("x3 + x1^2*x2", R3)) == "x1^2*x2 + x3");
  CHECK(to_string(Polynomial(R3)) == "0");
  CHECK(to_string(parse_polynomial("0 - 3/2*x1", R3)) == "-3/2*x1");
  CHECK(to_string(parse_polynomial("x2 - x1", R3)) == "-x1 + x2");
  CHECK(to_string(Polynomial::constant(R3, Rational(-7, 3))) == "-7/3");
}

TEST_CASE("print then parse round trips exactly") {
  Rng rng(23);
  auto R1 = PolyRing::create({"x"});
  auto R2 = PolyRing::create({"x", "y"});
  auto R3 = PolyRing::create({"x1", "x2", "x3"});
  int cases = 0;
  for (int i = 0; i < 1200; ++i) {
    const RingPtr& R = (i % 3 == 0) ? R1 : (i % 3 == 1 ? R2 : R3);
    Polynomial p = random_polynomial(R, 5, 6, 9, rng);
    if (rng() % 4 == 0) p = p * Rational(1, 1 + static_cast<long>(rng() % 5));
    Polynomial q = parse_polynomial(to_string(p), R);
    CHECK(q == p);
    ++cases;
  }
  CHECK(cases >= 1000);
}
