#pragma once

#include <optional>
#include <vector>

#include "keller/poly.hpp"

namespace keller {

// Reduced Groebner basis: generators primitive-integer with positive
// leading coefficients, fully inter-reduced, sorted ascending by leading
// monomial. Deterministic for a fixed input order.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

GroebnerBasis buchberger(std::vector<Polynomial> generators);

// Remainder of full multivariate division by the basis; canonical for a
// reduced basis, zero exactly on ideal members.
Polynomial normal_form(const Polynomial& h, const GroebnerBasis& gb);

struct MembershipResult {
  bool member = false;
  // For members: w with w(f_1,...,f_r) = h, in the r-variable witness ring.
  std::optional<Polynomial> representation;
  // Normal form of h in the extended ring (the obstruction, for non-members).
  std::optional<Polynomial> normal_form;
};

// Decides h in k[f_1,...,f_r] by eliminating the original variables from
// the ideal (t_i - f_i) under a block order. Generators may outnumber the
// ring variables (subrings like k[x^2, x^3] in one variable).
class SubalgebraOracle {
 public:
  explicit SubalgebraOracle(std::vector<Polynomial> generators);

  MembershipResult membership(const Polynomial& h) const;
  const std::vector<Polynomial>& generators() const { return generators_; }
  const RingPtr& base_ring() const { return base_; }
  const GroebnerBasis& basis() const { return gb_; }

 private:
  std::vector<Polynomial> generators_;
  RingPtr base_;
  RingPtr extended_;
  RingPtr source_;
  GroebnerBasis gb_;
};

MembershipResult subalgebra_membership(const Polynomial& h,
                                       const std::vector<Polynomial>& generators);
MembershipResult subalgebra_membership(const Polynomial& h, const PolyMap& f);

// Algebraicity of h over k[f_1,...,f_r] via the characteristic-zero rank
// criterion: every (r+1)x(r+1) Jacobian minor of (f_1..f_r, h) vanishes.
// Requires f algebraically independent.
bool is_algebraic_over(const Polynomial& h, const PolyMap& f);

}  // namespace keller
