#include "keller/poly.hpp"

#include <algorithm>
#include <functional>

namespace keller {

Polynomial::Polynomial(RingPtr ring)
    : ring_(std::move(ring)), terms_(TermCompare{ring_}) {
  if (!ring_) throw error("polynomial requires a ring");
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
  Polynomial p(std::move(ring));
  if (!value.is_zero()) p.terms_.emplace(Monomial::one(p.ring_->arity()), std::move(value));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  Polynomial p(std::move(ring));
  const int n = p.ring_->arity();
  if (index < 0 || index >= n) throw error("variable index out of range");
  Monomial m = Monomial::one(n);
  m.exp[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational coefficient) {
  Polynomial p(std::move(ring));
  if (m.arity() != p.ring_->arity()) throw error("monomial arity does not match ring");
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(m), std::move(coefficient));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Monomial::one(ring_->arity()));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  if (var < 0 || var >= ring_->arity()) throw error("variable index out of range");
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var]);
  return d;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_)) throw ring_mismatch("polynomials live in different rings");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  Polynomial r(a.ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : a.terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw error("negative polynomial power");
  Polynomial result = Polynomial::constant(ring_, Rational(1));
  Polynomial base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->arity()) throw error("variable index out of range");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial d = m;
    d.exp[var] -= 1;
    r.add_term(d, c * Rational(m.exp[var]));
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  const int n = ring_->arity();
  if (static_cast<int>(point.size()) != n) throw error("evaluation point has wrong length");
  // Precompute the powers of each coordinate that actually occur.
  std::vector<std::vector<Rational>> powers(n);
  for (int i = 0; i < n; ++i) {
    int maxe = 0;
    for (const auto& [m, c] : terms_) maxe = std::max(maxe, m.exp[i]);
    powers[i].reserve(maxe + 1);
    powers[i].push_back(Rational(1));
    for (int e = 1; e <= maxe; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n; ++i) {
      if (m.exp[i] != 0) t *= powers[i][m.exp[i]];
    }
    total += t;
  }
  return total;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_as(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  }
  return true;
}

PolyMap::PolyMap(RingPtr target, std::vector<Polynomial> images)
    : target_(std::move(target)), images_(std::move(images)) {
  const int r = static_cast<int>(images_.size());
  if (r < 1) throw error("polynomial map needs at least one image");
  if (r > target_->arity()) throw error("polynomial map has more images than target variables");
  for (const auto& f : images_) {
    if (!f.ring()->same_as(*target_)) throw ring_mismatch("map image lives outside the target ring");
  }
  source_ = witness_ring(r);
}

namespace {

// Substitute variables var.. of w, recursing on the sparse exponents of
// `var` (Horner over descending exponents).
Polynomial substitute_from(const Polynomial& w, const std::vector<Polynomial>& images,
                           const RingPtr& target, int var) {
  const int r = w.ring()->arity();
  if (w.is_zero()) return Polynomial(target);
  if (var == r) return Polynomial::constant(target, w.constant_value());

  // Bucket terms by the exponent of `var`, zeroing that exponent.
  std::map<int, Polynomial, std::greater<int>> buckets;
  for (const auto& [mono, c] : w.terms()) {
    int e = mono.exp[var];
    Monomial rest = mono;
    rest.exp[var] = 0;
    auto it = buckets.find(e);
    if (it == buckets.end()) it = buckets.emplace(e, Polynomial(w.ring())).first;
    it->second.add_term(rest, c);
  }

  const Polynomial& f = images[var];
  auto it = buckets.begin();
  Polynomial acc = substitute_from(it->second, images, target, var + 1);
  int prev = it->first;
  for (++it; it != buckets.end(); ++it) {
    acc = acc * f.pow(prev - it->first) + substitute_from(it->second, images, target, var + 1);
    prev = it->first;
  }
  if (prev > 0) acc = acc * f.pow(prev);
  return acc;
}

}  // namespace

Polynomial substitute(const Polynomial& w, const PolyMap& m) {
  if (w.ring()->arity() != m.arity()) {
    throw error("substitution arity mismatch: polynomial has " +
                std::to_string(w.ring()->arity()) + " variables, map has " +
                std::to_string(m.arity()) + " images");
  }
  return substitute_from(w, m.images(), m.target_ring(), 0);
}

Polynomial substitute(const Polynomial& w, const std::vector<Polynomial>& images) {
  if (images.empty()) throw error("substitution needs at least one image");
  const RingPtr& target = images.front().ring();
  for (const Polynomial& f : images) {
    if (!f.ring()->same_as(*target)) throw ring_mismatch("images live in different rings");
  }
  if (w.ring()->arity() != static_cast<int>(images.size())) {
    throw error("substitution arity mismatch: polynomial has " +
                std::to_string(w.ring()->arity()) + " variables, " +
                std::to_string(images.size()) + " images given");
  }
  return substitute_from(w, images, target, 0);
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.arity() != outer.target_ring()->arity() || inner.arity() != inner.target_ring()->arity()) {
    throw error("composition requires endomorphisms (r = n)");
  }
  if (!outer.target_ring()->same_as(*inner.target_ring())) {
    throw ring_mismatch("composed maps must share a ring");
  }
  std::vector<Polynomial> images;
  images.reserve(inner.arity());
  for (const auto& g : inner.images()) images.push_back(substitute(g, outer));
  return PolyMap(outer.target_ring(), std::move(images));
}

}  // namespace keller
