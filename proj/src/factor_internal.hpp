#pragma once

#include <vector>

#include "keller/factor.hpp"

namespace keller::detail {

// Dense integer univariate polynomial, index = degree, no trailing zeros.
using ZPoly = std::vector<BigInt>;

int zdeg(const ZPoly& f);
void ztrim(ZPoly& f);
ZPoly zmul(const ZPoly& a, const ZPoly& b);

// Irreducible factors (primitive, positive leading coefficient) of a
// square-free primitive integer polynomial with positive leading
// coefficient and degree >= 1.
std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f);

}  // namespace keller::detail
