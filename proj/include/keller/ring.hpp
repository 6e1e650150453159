#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "keller/rational.hpp"

namespace keller {

enum class OrderKind { GradedLex, Lex, Block };

// Block orders rank the first `block_split` variables strictly above the
// rest (graded-lex inside each block); used for elimination.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedLex;
  int block_split = 0;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}
  static Monomial one(int arity) { return Monomial(std::vector<int>(arity, 0)); }

  int arity() const { return static_cast<int>(exp.size()); }
  int degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Componentwise difference a - b; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  // Validates: at least one variable, names distinct and nonempty.
  static RingPtr create(std::vector<std::string> variables, MonomialOrder order = {});

  int arity() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  int variable_index(std::string_view name) const;  // -1 when unknown

  // Three-way monomial comparison under this ring's order.
  int compare(const Monomial& a, const Monomial& b) const;

  bool same_as(const PolyRing& other) const {
    return this == &other || (vars_ == other.vars_ && order_ == other.order_);
  }

 private:
  PolyRing(std::vector<std::string> vars, MonomialOrder order)
      : vars_(std::move(vars)), order_(order) {}

  std::vector<std::string> vars_;
  MonomialOrder order_;
};

// The conventional ring for witness/representation polynomials in r
// variables: "T" when r = 1, otherwise y1..yr. Graded-lex.
RingPtr witness_ring(int r);

}  // namespace keller
