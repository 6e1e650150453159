#pragma once

#include <map>
#include <vector>

#include "keller/poly.hpp"

namespace keller {

// All C(n, r) maximal minors of the Jacobian matrix, keyed by the strictly
// increasing variable-index subsets they differentiate against.
struct JacobianMinors {
  std::map<std::vector<int>, Polynomial> minors;
};

// Row i, column j holds d f_i / d x_j.
std::vector<std::vector<Polynomial>> jacobian_matrix(const PolyMap& f);

JacobianMinors jacobian_minors(const PolyMap& f);

struct DgcdResult {
  Polynomial value;  // normalized gcd of all minors
  bool is_constant_nonzero = false;
};

// Differential gcd: gcd of all maximal Jacobian minors. Throws when every
// minor vanishes (algebraically dependent tuple).
DgcdResult dgcd(const PolyMap& f);

// Jacobian condition for endomorphisms: the full determinant is a nonzero
// constant. Requires r = n.
bool is_keller(const PolyMap& f);

// Characteristic-zero criterion: some maximal minor is nonzero.
bool is_algebraically_independent(const PolyMap& f);

// Exact determinant of a square polynomial matrix (cofactor expansion for
// small sizes, fraction-free Bareiss elimination beyond).
Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m, const RingPtr& ring);

}  // namespace keller
