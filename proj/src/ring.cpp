#include "keller/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace keller {

int Monomial::degree() const {
  return std::accumulate(exp.begin(), exp.end(), 0);
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (exp.size() != other.exp.size()) return false;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp.size(); ++i) {
    r.exp[i] -= b.exp[i];
    if (r.exp[i] < 0) throw error("monomial division is not exact");
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(r.exp[i], b.exp[i]);
  return r;
}

RingPtr PolyRing::create(std::vector<std::string> variables, MonomialOrder order) {
  if (variables.empty()) throw error("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw error("variable names must be nonempty");
    if (!seen.insert(v).second) throw error("duplicate variable name: " + v);
  }
  if (order.kind == OrderKind::Block) {
    if (order.block_split <= 0 || order.block_split >= static_cast<int>(variables.size())) {
      throw error("block order split must lie strictly inside the variable list");
    }
  }
  return RingPtr(new PolyRing(std::move(variables), order));
}

int PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

// Graded-lex on the index range [lo, hi): total degree first, then earlier
// variables take precedence.
int compare_grlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = lo; i < hi; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

int compare_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const int n = arity();
  if (a.arity() != n || b.arity() != n) throw error("monomial arity mismatch");
  switch (order_.kind) {
    case OrderKind::GradedLex:
      return compare_grlex(a, b, 0, n);
    case OrderKind::Lex:
      return compare_lex(a, b, 0, n);
    case OrderKind::Block: {
      int c = compare_grlex(a, b, 0, order_.block_split);
      if (c != 0) return c;
      return compare_grlex(a, b, order_.block_split, n);
    }
  }
  return 0;
}

RingPtr witness_ring(int r) {
  if (r < 1) throw error("witness ring arity must be positive");
  if (r == 1) return PolyRing::create({"T"});
  std::vector<std::string> names;
  names.reserve(r);
  for (int i = 1; i <= r; ++i) names.push_back("y" + std::to_string(i));
  return PolyRing::create(std::move(names));
}

}  // namespace keller
