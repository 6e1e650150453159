#pragma once

#include <optional>
#include <vector>

#include "keller/poly.hpp"

namespace keller {

struct ContentPrimitive {
  Rational content;
  Polynomial primitive;
};

// Splits p as content * primitive with coprime integer coefficients and a
// positive leading coefficient under the ring order. Throws on zero.
ContentPrimitive content_primitive(const Polynomial& p);

// The primitive positive-leading-coefficient associate of p.
Polynomial normalize_primitive(const Polynomial& p);

// Quotient q / p when p divides q exactly, nullopt otherwise. Throws when
// p is zero.
std::optional<Polynomial> exact_quotient(const Polynomial& q, const Polynomial& p);
bool divides(const Polynomial& p, const Polynomial& q);

// Normalized greatest common divisor (primitive, positive leading
// coefficient). gcd(p, 0) is the normalization of p; gcd(0, 0) throws.
// Computed by recursive content extraction plus a subresultant polynomial
// remainder sequence in a chosen main variable. Swap point for a modular
// algorithm: replace gcd_primitive_integer in factor.cpp.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

// True iff gcd(p, dp/dx_1, ..., dp/dx_n) is constant; constants themselves
// count as square-free. Throws on zero.
bool is_squarefree(const Polynomial& p);

struct SquareFreePart {
  Polynomial factor;  // square-free, primitive, nonconstant
  int multiplicity;
};

struct SquareFreeDecomposition {
  Rational unit;
  std::vector<SquareFreePart> parts;  // distinct multiplicities, ascending
  Polynomial reassemble() const;
};

// Yun decomposition p = unit * prod s_i^i with pairwise coprime square-free
// parts. Variables absent from a factor are handled by recursing on the
// content with respect to the main variable.
SquareFreeDecomposition squarefree_decompose(const Polynomial& p);

struct FactorPart {
  Polynomial factor;  // irreducible, primitive, positive leading coefficient
  int multiplicity;
};

struct Factorization {
  Rational unit;
  std::vector<FactorPart> factors;
  Polynomial reassemble() const;
};

// Complete factorization over Q. Univariate inputs go through square-free
// decomposition, factorization modulo a suitable prime, Hensel lifting and
// subset recombination; multivariate inputs are decided through a packed
// univariate instance whose candidate factors are verified by exact
// division before being accepted.
Factorization factor(const Polynomial& p);
Factorization factor_univariate(const Polynomial& p);

// Irreducibility over Q of the primitive part. Zero and constants are
// rejected (units are neither irreducible nor reducible).
bool is_irreducible(const Polynomial& p);

// Some irreducible factor of a nonzero nonconstant polynomial.
Polynomial some_irreducible_factor(const Polynomial& p);

// Deterministic total order on polynomials of one ring (degree, then terms);
// used to make factor lists and reports reproducible.
int compare_polynomials(const Polynomial& a, const Polynomial& b);

}  // namespace keller
