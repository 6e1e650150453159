#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "keller/rational.hpp"
#include "keller/ring.hpp"

namespace keller {

// Sparse multivariate polynomial over the rationals. Terms are kept in a
// map sorted descending under the ring's monomial order, so begin() is the
// leading term. Zero coefficients are never stored.
class Polynomial {
 public:
  struct TermCompare {
    RingPtr ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return ring->compare(a, b) > 0;
    }
  };
  using TermMap = std::map<Monomial, Rational, TermCompare>;

  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational value);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial term(RingPtr ring, Monomial m, Rational coefficient);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the unit monomial (the value, for constant polynomials).
  Rational constant_value() const;
  // -1 marks the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  Polynomial pow(int exponent) const;
  Polynomial derivative(int var) const;
  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Accumulate a term, pruning a resulting zero coefficient.
  void add_term(const Monomial& m, const Rational& c);

 private:
  void check_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  TermMap terms_;
};

// A tuple (f_1,...,f_r) of polynomials in a common target ring with
// 1 <= r <= n; the endomorphism x_i -> f_i when r = n.
class PolyMap {
 public:
  PolyMap(RingPtr target, std::vector<Polynomial> images);

  int arity() const { return static_cast<int>(images_.size()); }
  const RingPtr& target_ring() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(int i) const { return images_.at(i); }
  // Ring of the r formal source variables (T, or y1..yr).
  const RingPtr& source_ring() const { return source_; }

 private:
  RingPtr target_;
  RingPtr source_;
  std::vector<Polynomial> images_;
};

// Exact composition w(f_1,...,f_r); w must have arity r. Evaluated by a
// per-variable Horner scheme over the sparse exponents.
Polynomial substitute(const Polynomial& w, const PolyMap& m);

// Generator-list form: images share a ring but may outnumber its variables.
Polynomial substitute(const Polynomial& w, const std::vector<Polynomial>& images);

// Endomorphism composition: (outer . inner)(x_i) = outer(inner(x_i)).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

}  // namespace keller
