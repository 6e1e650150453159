#include <doctest.h>

#include <algorithm>

#include "keller/groebner.hpp"
#include "keller/harness.hpp"
#include "keller/parse.hpp"

using namespace keller;

namespace {

Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

Polynomial spoly_of(const Polynomial& f, const Polynomial& g) {
  Monomial gamma = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = Polynomial::term(f.ring(), gamma / f.leading_monomial(),
                                  f.leading_coefficient().inverse());
  Polynomial b = Polynomial::term(g.ring(), gamma / g.leading_monomial(),
                                  g.leading_coefficient().inverse());
  return a * f - b * g;
}

bool contains(const GroebnerBasis& gb, const Polynomial& p) {
  return std::any_of(gb.generators.begin(), gb.generators.end(),
                     [&](const Polynomial& g) { return g == p; });
}

}  // namespace

TEST_CASE("buchberger on the documented generator sets") {
  auto RL = PolyRing::create({"x", "y"}, {OrderKind::Lex});

  GroebnerBasis g1 = buchberger({P(RL, "x")});
  REQUIRE(g1.generators.size() == 1);
  CHECK(g1.generators[0] == P(RL, "x"));

  GroebnerBasis g2 = buchberger({P(RL, "x^2-y"), P(RL, "x*y-1")});
  REQUIRE(g2.generators.size() == 2);
  CHECK(contains(g2, P(RL, "x-y^2")));
  CHECK(contains(g2, P(RL, "y^3-1")));

  GroebnerBasis g3 = buchberger({P(RL, "1")});
  REQUIRE(g3.generators.size() == 1);
  CHECK(g3.generators[0] == P(RL, "1"));

  CHECK_THROWS_AS(buchberger({}), keller::error);
  CHECK_THROWS_AS(buchberger({Polynomial(RL)}), keller::error);
}

TEST_CASE("every S-polynomial reduces to zero modulo the basis") {
  auto RL = PolyRing::create({"x", "y", "z"}, {OrderKind::Lex});
  GroebnerBasis gb = buchberger({P(RL, "x*y-z"), P(RL, "y*z-x"), P(RL, "z*x-y")});
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
      CHECK(normal_form(spoly_of(gb.generators[i], gb.generators[j]), gb).is_zero());
    }
  }
  // Reducedness: no generator's leading monomial divides a term of another.
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    for (std::size_t j = 0; j < gb.generators.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : gb.generators[j].terms()) {
        CHECK_FALSE(gb.generators[i].leading_monomial().divides(m));
      }
    }
  }
}

TEST_CASE("normal form against principal and elimination bases") {
  auto RL = PolyRing::create({"x", "y"}, {OrderKind::Lex});
  GroebnerBasis gx = buchberger({P(RL, "x")});
  CHECK(normal_form(P(RL, "x^3"), gx).is_zero());
  CHECK(normal_form(P(RL, "y+1"), gx) == P(RL, "y+1"));

  GroebnerBasis gb = buchberger({P(RL, "x^2-y"), P(RL, "x*y-1")});
  // x^2*y^2 - 1 = (x*y-1)*(x*y+1) lies in the ideal, so the normal form of
  // x^2*y^2 is exactly 1.
  CHECK(P(RL, "x^2*y^2-1") == P(RL, "x*y-1") * P(RL, "x*y+1"));
  CHECK(normal_form(P(RL, "x^2*y^2"), gb) == P(RL, "1"));

  // Idempotence.
  Polynomial h = P(RL, "x^5*y^2 + 3*x - 7");
  Polynomial nf1 = normal_form(h, gb);
  CHECK(normal_form(nf1, gb) == nf1);
  CHECK_THROWS_AS(normal_form(P(PolyRing::create({"z"}), "z"), gb), ring_mismatch);
}

TEST_CASE("subalgebra membership decides the documented cases") {
  auto R3 = PolyRing::create({"x1", "x2", "x3"});
  PolyMap f(R3, {P(R3, "x1^2*x2"), P(R3, "x3")});
  MembershipResult direct = subalgebra_membership(P(R3, "x1^2*x2+x3"), f);
  CHECK(direct.member);
  CHECK(*direct.representation == P(witness_ring(2), "y1+y2"));

  // x is not in Q[x^2, x^3]: every element of that subalgebra has a zero
  // degree-1 coefficient, since the generators start at degree 2.
  auto RX = PolyRing::create({"x"});
  std::vector<Polynomial> gens{P(RX, "x^2"), P(RX, "x^3")};
  MembershipResult non = subalgebra_membership(P(RX, "x"), gens);
  CHECK_FALSE(non.member);

  MembershipResult c = subalgebra_membership(P(RX, "5"), gens);
  CHECK(c.member);
  CHECK(*c.representation == P(witness_ring(2), "5"));

  MembershipResult x5 = subalgebra_membership(P(RX, "x^5"), gens);
  CHECK(x5.member);
  CHECK(substitute(*x5.representation, gens) == P(RX, "x^5"));
}

TEST_CASE("membership round trip over random pairs") {
  Rng rng(47);
  int done = 0;
  while (done < 20) {
    int n = 1 + static_cast<int>(rng() % 3);
    int r = 1 + static_cast<int>(rng() % std::min(n, 3));
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    RingPtr ring = PolyRing::create(names);
    std::vector<Polynomial> images;
    for (int i = 0; i < r; ++i) {
      Polynomial f = random_polynomial(ring, 1 + static_cast<int>(rng() % 3), 3, 3, rng);
      if (f.is_zero()) f = Polynomial::variable(ring, i % n);
      images.push_back(f);
    }
    Polynomial w = random_polynomial(witness_ring(r), 2, 3, 3, rng);
    if (w.is_zero()) continue;
    PolyMap f(ring, images);
    Polynomial h = substitute(w, f);
    MembershipResult m = subalgebra_membership(h, f);
    REQUIRE(m.member);
    CHECK(substitute(*m.representation, f) == h);
    ++done;
  }
}

TEST_CASE("membership verdict ignores generator order") {
  auto RX = PolyRing::create({"x"});
  std::vector<Polynomial> gens{P(RX, "x^2"), P(RX, "x^3")};
  std::vector<Polynomial> swapped{P(RX, "x^3"), P(RX, "x^2")};
  for (const char* text : {"x", "x^2", "x^5", "x^7", "1+x^4"}) {
    bool a = subalgebra_membership(P(RX, text), gens).member;
    bool b = subalgebra_membership(P(RX, text), swapped).member;
    CHECK(a == b);
  }
}

TEST_CASE("tag variables avoid name collisions") {
  auto R = PolyRing::create({"t1", "x"});
  std::vector<Polynomial> gens{P(R, "x^2+t1")};
  MembershipResult m = subalgebra_membership(P(R, "(x^2+t1)^2"), gens);
  CHECK(m.member);
  CHECK(*m.representation == P(witness_ring(1), "T^2"));
}

TEST_CASE("algebraicity over a subalgebra via the rank criterion") {
  auto RXY = PolyRing::create({"x", "y"});
  PolyMap sum(RXY, {P(RXY, "x+y")});
  CHECK(is_algebraic_over(P(RXY, "(x+y)^2"), sum));
  CHECK_FALSE(is_algebraic_over(P(RXY, "x"), sum));

  auto R3 = PolyRing::create({"x1", "x2", "x3"});
  PolyMap proj(R3, {P(R3, "x1"), P(R3, "x2")});
  CHECK_FALSE(is_algebraic_over(P(R3, "x3"), proj));

  PolyMap remark(R3, {P(R3, "x1^2*x2"), P(R3, "x3")});
  CHECK_FALSE(is_algebraic_over(P(R3, "x1"), remark));
  CHECK(is_algebraic_over(P(R3, "x1^4*x2^2"), remark));

  PolyMap dependent(RXY, {P(RXY, "x"), P(RXY, "x^2")});
  CHECK_THROWS_AS(is_algebraic_over(P(RXY, "y"), dependent), keller::error);

  // r = n: everything is algebraic.
  PolyMap full(RXY, {P(RXY, "x"), P(RXY, "y")});
  CHECK(is_algebraic_over(P(RXY, "x^5*y"), full));
}
