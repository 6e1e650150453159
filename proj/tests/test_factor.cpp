#include <doctest.h>

#include <algorithm>

#include "keller/factor.hpp"
#include "keller/harness.hpp"
#include "keller/parse.hpp"

using namespace keller;

namespace {

const RingPtr RX = PolyRing::create({"x"});
const RingPtr RXY = PolyRing::create({"x", "y"});
const RingPtr R3 = PolyRing::create({"x1", "x2", "x3"});

Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

}  // namespace

TEST_CASE("content and primitive part") {
  auto [c1, p1] = content_primitive(P(RX, "6*x+9"));
  CHECK(c1 == Rational(3));
  CHECK(p1 == P(RX, "2*x+3"));

  auto [c2, p2] = content_primitive(P(RX, "-x"));
  CHECK(c2 == Rational(-1));
  CHECK(p2 == P(RX, "x"));

  auto [c3, p3] = content_primitive(P(RX, "3/2*x^2"));
  CHECK(c3 == Rational(3, 2));
  CHECK(p3 == P(RX, "x^2"));

  CHECK_THROWS_AS(content_primitive(Polynomial(RX)), keller::error);
}

TEST_CASE("exact division with quotients") {
  // (x^2+1)^2 divides x^6+6x^4+9x^2+4 with quotient x^2+4; checked by
  // re-multiplying.
  Polynomial g2 = P(RX, "(x^2+1)^2");
  Polynomial big = P(RX, "x^6+6*x^4+9*x^2+4");
  auto q = exact_quotient(big, g2);
  REQUIRE(q.has_value());
  CHECK(*q == P(RX, "x^2+4"));
  CHECK(*q * g2 == big);

  auto q2 = exact_quotient(P(RXY, "x^2*y"), P(RXY, "x"));
  REQUIRE(q2.has_value());
  CHECK(*q2 == P(RXY, "x*y"));

  CHECK_FALSE(exact_quotient(P(RX, "x^3+3*x-1"), P(RX, "x^2+1")).has_value());
  CHECK_THROWS_AS(exact_quotient(P(RX, "x"), Polynomial(RX)), division_by_zero);
}

TEST_CASE("multivariate gcd on the documented pairs") {
  // gcd(x^2-y^2, (x+y)^2): both are multiples of x+y, and the cofactors
  // x-y and x+y share no common factor.
  Polynomial g = gcd(P(RXY, "x^2-y^2"), P(RXY, "(x+y)^2"));
  CHECK(g == P(RXY, "x+y"));
  CHECK(divides(g, P(RXY, "x^2-y^2")));
  CHECK(divides(g, P(RXY, "(x+y)^2")));

  CHECK(gcd(P(RXY, "x^2+y"), P(RXY, "1")) == P(RXY, "1"));
  CHECK(gcd(P(R3, "2*x1*x2"), P(R3, "x1^2")) == P(R3, "x1"));
  CHECK(gcd(P(RX, "x^2"), Polynomial(RX)) == P(RX, "x^2"));
  CHECK_THROWS_AS(gcd(Polynomial(RX), Polynomial(RX)), keller::error);
}

TEST_CASE("gcd is scale-covariant on samples") {
  Rng rng(31);
  int checked = 0;
  while (checked < 25) {
    Polynomial p = random_polynomial(RXY, 3, 3, 4, rng);
    Polynomial q = random_polynomial(RXY, 3, 3, 4, rng);
    Polynomial h = random_polynomial(RXY, 2, 2, 3, rng);
    if (p.is_zero() || q.is_zero() || h.is_zero()) continue;
    Polynomial g = gcd(p, q);
    CHECK(divides(g, p));
    CHECK(divides(g, q));
    CHECK(gcd(h * p, h * q) == normalize_primitive(h) * g);
    ++checked;
  }
}

TEST_CASE("square-freeness via gcd with the partials") {
  CHECK_FALSE(is_squarefree(P(RXY, "x^2*y")));
  CHECK(is_squarefree(P(RX, "x^2+1")));
  // gcd(x^2+1, 2x) = 1 by hand: a common factor would divide both x and
  // x^2+1, hence be constant.
  CHECK(gcd(P(RX, "x^2+1"), P(RX, "2*x")) == P(RX, "1"));
  CHECK_FALSE(is_squarefree(P(RX, "x^6+6*x^4+9*x^2+4")));
  CHECK(is_squarefree(P(RX, "5")));
  CHECK_THROWS_AS(is_squarefree(Polynomial(RX)), keller::error);
}

TEST_CASE("square-free decomposition of the worked sextic") {
  SquareFreeDecomposition d = squarefree_decompose(P(RX, "x^6+6*x^4+9*x^2+4"));
  CHECK(d.unit == Rational(1));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].factor == P(RX, "x^2+4"));
  CHECK(d.parts[0].multiplicity == 1);
  CHECK(d.parts[1].factor == P(RX, "x^2+1"));
  CHECK(d.parts[1].multiplicity == 2);
  CHECK(d.reassemble() == P(RX, "x^6+6*x^4+9*x^2+4"));
}

TEST_CASE("square-free decomposition edge shapes") {
  SquareFreeDecomposition d1 = squarefree_decompose(P(RX, "x"));
  REQUIRE(d1.parts.size() == 1);
  CHECK(d1.parts[0].factor == P(RX, "x"));
  CHECK(d1.parts[0].multiplicity == 1);

  SquareFreeDecomposition d3 = squarefree_decompose(P(RX, "x^3"));
  REQUIRE(d3.parts.size() == 1);
  CHECK(d3.parts[0].factor == P(RX, "x"));
  CHECK(d3.parts[0].multiplicity == 3);

  // Mixed multivariate with a rational content.
  Polynomial p = P(RXY, "1/2*x^2*y*(x+y)^3");
  SquareFreeDecomposition d = squarefree_decompose(p);
  CHECK(d.reassemble() == p);
  for (const auto& part : d.parts) {
    CHECK(is_squarefree(part.factor));
    CHECK(content_primitive(part.factor).content == Rational(1));
  }
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
      CHECK(gcd(d.parts[i].factor, d.parts[j].factor).is_constant());
    }
  }
}

TEST_CASE("univariate factorization of the documented polynomials") {
  Factorization f1 = factor_univariate(P(RX, "x^2-1"));
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0].factor == P(RX, "x-1"));
  CHECK(f1.factors[1].factor == P(RX, "x+1"));
  CHECK(f1.reassemble() == P(RX, "x^2-1"));

  Factorization f2 = factor_univariate(P(RX, "x^6+6*x^4+9*x^2+4"));
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0].factor == P(RX, "x^2+1"));
  CHECK(f2.factors[0].multiplicity == 2);
  CHECK(f2.factors[1].factor == P(RX, "x^2+4"));
  CHECK(f2.factors[1].multiplicity == 1);
  CHECK(f2.reassemble() == P(RX, "x^6+6*x^4+9*x^2+4"));

  Factorization f3 = factor_univariate(P(RX, "x^2+1"));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].multiplicity == 1);
  // Degree-2 irreducibility oracle: no rational root (root candidates are
  // divisors of the constant term over divisors of the leading one).
  for (long num : {-1L, 1L}) {
    std::vector<Rational> at{Rational(num)};
    CHECK_FALSE(P(RX, "x^2+1").evaluate(at).is_zero());
  }

  CHECK_THROWS_AS(factor_univariate(Polynomial(RX)), keller::error);
  CHECK_THROWS_AS(factor_univariate(P(RXY, "x*y")), keller::error);
}

TEST_CASE("harder univariate factorizations") {
  Polynomial p = P(RX, "(x^2+x+1)*(x^3-2)*(x-5)^2");
  Factorization f = factor_univariate(p);
  CHECK(f.reassemble() == p);
  REQUIRE(f.factors.size() == 3);
  for (const auto& part : f.factors) CHECK(is_irreducible(part.factor));

  // Four modular factors at every good prime, only the quadratic split
  // over the rationals: exercises subset recombination.
  Polynomial q = P(RX, "(x^2-2)*(x^2-3)");
  Factorization fq = factor_univariate(q);
  CHECK(fq.reassemble() == q);
  REQUIRE(fq.factors.size() == 2);

  Polynomial r = P(RX, "3/4*x^2 - 3/4");
  Factorization fr = factor_univariate(r);
  CHECK(fr.unit == Rational(3, 4));
  CHECK(fr.reassemble() == r);
}

TEST_CASE("irreducibility over the rationals") {
  CHECK(is_irreducible(P(RX, "x^2+1")));
  CHECK_FALSE(is_irreducible(P(RXY, "x^2-y^2")));
  CHECK_FALSE(is_irreducible(P(R3, "x1^2*x2")));
  CHECK(is_irreducible(P(RXY, "x+y^2")));
  CHECK(is_irreducible(P(RXY, "x^2+y^2")));  // packed-instance path
  CHECK_FALSE(is_irreducible(P(RXY, "x^2*y+x")));
  CHECK(is_irreducible(P(R3, "x1*x2-x3^2")));
  CHECK_THROWS_AS(is_irreducible(P(RX, "5")), keller::error);
  CHECK_THROWS_AS(is_irreducible(Polynomial(RX)), keller::error);
}

TEST_CASE("multivariate factor splits verified products") {
  Polynomial p = P(RXY, "(x+y)*(x-y)*(x^2+y^2)");
  Factorization f = factor(p);
  CHECK(f.reassemble() == p);
  REQUIRE(f.factors.size() == 3);
  for (const auto& part : f.factors) CHECK(is_irreducible(part.factor));

  Polynomial m = P(R3, "x1^2*x2");
  Factorization fm = factor(m);
  CHECK(fm.reassemble() == m);
  CHECK(fm.factors.size() == 2);

  Polynomial one_factor = some_irreducible_factor(P(RXY, "x^2*y+x*y^2"));
  CHECK(is_irreducible(one_factor));
  CHECK(divides(one_factor, P(RXY, "x^2*y+x*y^2")));
}

TEST_CASE("factorization battery over random small products") {
  Rng rng(101);
  std::vector<Polynomial> small_irreducibles = {
      P(RX, "x"),     P(RX, "x+1"),   P(RX, "x-2"),     P(RX, "x^2+1"),
      P(RX, "x^2+4"), P(RX, "x^2-2"), P(RX, "x^2+x+1"), P(RX, "x^3-2"),
  };
  for (int round = 0; round < 120; ++round) {
    Polynomial p = Polynomial::constant(RX, Rational(1));
    int total_mult = 0;
    int nfactors = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < nfactors; ++k) {
      std::size_t pick = rng() % small_irreducibles.size();
      int mult = 1 + static_cast<int>(rng() % 3);
      total_mult += mult;
      p = p * small_irreducibles[pick].pow(mult);
    }
    Factorization f = factor_univariate(p);
    CHECK(f.reassemble() == p);
    int seen_mult = 0;
    for (const auto& part : f.factors) {
      CHECK(is_irreducible(part.factor));
      seen_mult += part.multiplicity;
    }
    CHECK(seen_mult == total_mult);

    SquareFreeDecomposition d = squarefree_decompose(p);
    CHECK(d.reassemble() == p);
    bool all_mult_one = std::all_of(f.factors.begin(), f.factors.end(),
                                    [](const FactorPart& x) { return x.multiplicity == 1; });
    CHECK(is_squarefree(p) == all_mult_one);
  }
}

TEST_CASE("deterministic factor ordering") {
  Polynomial p = P(RX, "(x^2+1)*(x-1)*(x+3)");
  Factorization a = factor_univariate(p);
  Factorization b = factor_univariate(p);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].factor == b.factors[i].factor);
  }
  for (std::size_t i = 1; i < a.factors.size(); ++i) {
    CHECK(compare_polynomials(a.factors[i - 1].factor, a.factors[i].factor) < 0);
  }
}
