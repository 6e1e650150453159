#include <doctest.h>

#include <random>

#include "keller/harness.hpp"
#include "keller/parse.hpp"
#include "keller/poly.hpp"

using namespace keller;

namespace {

RingPtr ring_x() { return PolyRing::create({"x"}); }
RingPtr ring_xy() { return PolyRing::create({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

}  // namespace

TEST_CASE("ring arithmetic basics") {
  auto R = ring_xy();
  CHECK(P(R, "(x+y)*(x-y)") == P(R, "x^2-y^2"));
  CHECK((P(R, "x+y") * Polynomial(R)).is_zero());
  CHECK(P(R, "(x^2+1)^2*(x^2+4)") == P(R, "x^6+6*x^4+9*x^2+4"));
  CHECK_THROWS_AS(P(ring_x(), "x") + P(ring_xy(), "x"), ring_mismatch);
}

TEST_CASE("partial derivatives") {
  auto R = ring_xy();
  CHECK(P(R, "x^3+3*x").derivative(0) == P(R, "3*x^2+3"));
  CHECK(P(R, "x^2").derivative(1).is_zero());
  CHECK(P(R, "x^2*y+3*x").derivative(0) == P(R, "2*x*y+3"));
  CHECK(P(R, "x^2*y+3*x").derivative(1) == P(R, "x^2"));
  CHECK_THROWS_AS(P(R, "x").derivative(5), keller::error);
}

TEST_CASE("substitution composes exactly") {
  auto R3 = PolyRing::create({"x1", "x2", "x3"});
  PolyMap m(R3, {P(R3, "x1^2*x2"), P(R3, "x3")});
  auto W = witness_ring(2);
  CHECK(substitute(P(W, "y1+y2"), m) == P(R3, "x1^2*x2+x3"));

  auto R1 = ring_x();
  PolyMap cubic(R1, {P(R1, "x^3+3*x")});
  auto T = witness_ring(1);
  CHECK(substitute(P(T, "T^2+4"), cubic) == P(R1, "x^6+6*x^4+9*x^2+4"));
  CHECK(substitute(P(T, "-7/2"), cubic) == P(R1, "-7/2"));
  CHECK_THROWS_AS(substitute(P(W, "y1"), cubic), keller::error);
}

TEST_CASE("total degree with a zero marker") {
  auto R3 = PolyRing::create({"x1", "x2", "x3"});
  CHECK(P(R3, "x1^2*x2").total_degree() == 3);
  CHECK(P(R3, "5").total_degree() == 0);
  CHECK(Polynomial(R3).total_degree() == -1);  // zero polynomial
}

TEST_CASE("exact evaluation") {
  auto R = ring_x();
  std::vector<Rational> two{Rational(2)};
  CHECK(P(R, "x^2+1").evaluate(two) == Rational(5));
  CHECK(Polynomial(R).evaluate(two).is_zero());
  // Factored cross-check: value at 1 equals (1+1)^2 * (1+4).
  std::vector<Rational> one{Rational(1)};
  CHECK(P(R, "x^6+6*x^4+9*x^2+4").evaluate(one) == Rational(20));
  CHECK(Rational(20) == (Rational(1) + Rational(1)) * (Rational(1) + Rational(1)) *
                            (Rational(1) + Rational(4)));
  CHECK_THROWS_AS(P(R, "x").evaluate(std::vector<Rational>{}), keller::error);
}

TEST_CASE("leibniz rule on random samples") {
  auto R = ring_xy();
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_polynomial(R, 3, 4, 5, rng);
    Polynomial q = random_polynomial(R, 3, 4, 5, rng);
    for (int v = 0; v < 2; ++v) {
      CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
    }
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  auto R = ring_xy();
  auto W = witness_ring(2);
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    PolyMap m(R, {random_polynomial(R, 2, 3, 3, rng), random_polynomial(R, 2, 3, 3, rng)});
    Polynomial w1 = random_polynomial(W, 2, 3, 3, rng);
    Polynomial w2 = random_polynomial(W, 2, 3, 3, rng);
    CHECK(substitute(w1 * w2, m) == substitute(w1, m) * substitute(w2, m));
    CHECK(substitute(w1 + w2, m) == substitute(w1, m) + substitute(w2, m));
  }
}

TEST_CASE("evaluation commutes with substitution") {
  auto R = ring_xy();
  auto W = witness_ring(2);
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    PolyMap m(R, {random_polynomial(R, 2, 3, 3, rng), random_polynomial(R, 2, 3, 3, rng)});
    Polynomial w = random_polynomial(W, 2, 3, 3, rng);
    std::vector<Rational> a{Rational(static_cast<long>(rng() % 7) - 3),
                            Rational(static_cast<long>(rng() % 7) - 3)};
    std::vector<Rational> fa{m.image(0).evaluate(a), m.image(1).evaluate(a)};
    CHECK(substitute(w, m).evaluate(a) == w.evaluate(fa));
  }
}

TEST_CASE("polynomial maps validate their invariants") {
  auto R = ring_xy();
  CHECK_THROWS_AS(PolyMap(R, {}), keller::error);
  CHECK_THROWS_AS(PolyMap(R, {P(R, "x"), P(R, "y"), P(R, "x+y")}), keller::error);
  PolyMap ok(R, {P(R, "x+y")});
  CHECK(ok.arity() == 1);
  CHECK(ok.source_ring()->variables() == std::vector<std::string>{"T"});
}

TEST_CASE("endomorphism composition matches substitution") {
  auto R = ring_xy();
  PolyMap f(R, {P(R, "x+y^2"), P(R, "y")});
  PolyMap g(R, {P(R, "x"), P(R, "y+x^2")});
  PolyMap fg = compose(f, g);
  // (f . g)(x_i) = g_i(f_1, f_2) under the image convention.
  CHECK(fg.image(0) == P(R, "x+y^2"));
  CHECK(fg.image(1) == P(R, "y+(x+y^2)^2"));
}
