#include "keller/groebner.hpp"

#include <algorithm>
#include <set>

#include "keller/factor.hpp"
#include "keller/jacobian.hpp"

namespace keller {

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  Monomial gamma = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = Polynomial::term(f.ring(), gamma / f.leading_monomial(),
                                  f.leading_coefficient().inverse());
  Polynomial b = Polynomial::term(g.ring(), gamma / g.leading_monomial(),
                                  g.leading_coefficient().inverse());
  return a * f - b * g;
}

Polynomial reduce_full(const Polynomial& h, const std::vector<Polynomial>& basis) {
  Polynomial remainder(h.ring());
  Polynomial work = h;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis) {
      if (g.leading_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Polynomial t = Polynomial::term(
          work.ring(), lm / reducer->leading_monomial(),
          work.leading_coefficient() / reducer->leading_coefficient());
      work -= t * *reducer;
    } else {
      remainder.add_term(lm, work.leading_coefficient());
      work -= Polynomial::term(work.ring(), lm, work.leading_coefficient());
    }
  }
  return remainder;
}

struct PairKey {
  int degree;
  int i;
  int j;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators) {
  if (generators.empty()) throw error("Groebner basis of an empty generator list");
  const RingPtr ring = generators.front().ring();
  std::vector<Polynomial> basis;
  for (const Polynomial& g : generators) {
    if (g.is_zero()) throw error("Groebner generators must be nonzero");
    if (!g.ring()->same_as(*ring)) throw ring_mismatch("generators live in different rings");
    basis.push_back(normalize_primitive(g));
  }

  // Pending S-pairs keyed by lcm degree (deterministic normal selection);
  // `considered` feeds the chain criterion.
  std::set<PairKey> pending;
  std::set<std::pair<int, int>> considered;
  auto push_pairs = [&](int upto) {
    for (int i = 0; i < upto; ++i) {
      Monomial g = lcm(basis[i].leading_monomial(), basis[upto].leading_monomial());
      pending.insert({g.degree(), i, upto});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  while (!pending.empty()) {
    auto [degree, i, j] = *pending.begin();
    pending.erase(pending.begin());
    considered.insert({i, j});

    const Monomial& lmi = basis[i].leading_monomial();
    const Monomial& lmj = basis[j].leading_monomial();
    Monomial g = lcm(lmi, lmj);
    if (g == lmi * lmj) continue;  // coprime leading terms
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_monomial().divides(g)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (considered.count(key(i, k)) && considered.count(key(j, k))) chained = true;
    }
    if (chained) continue;

    Polynomial r = reduce_full(spoly(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(normalize_primitive(r));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop generators whose leading monomial is divisible by
  // another's.
  std::vector<Polynomial> minimal;
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const Polynomial& g2 : basis) {
    bool redundant = false;
    for (const Polynomial& kept : minimal) {
      if (kept.leading_monomial().divides(g2.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g2);
  }

  // Inter-reduce until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(minimal[l]);
      }
      Polynomial reduced = reduce_full(minimal[k], others);
      if (reduced.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<long>(k));
        changed = true;
        break;
      }
      reduced = normalize_primitive(reduced);
      if (!(reduced == minimal[k])) {
        minimal[k] = reduced;
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return {ring, std::move(minimal)};
}

Polynomial normal_form(const Polynomial& h, const GroebnerBasis& gb) {
  if (!h.ring()->same_as(*gb.ring)) throw ring_mismatch("normal form across rings");
  return reduce_full(h, gb.generators);
}

namespace {

Monomial embed_monomial(const Monomial& m, int extended_arity) {
  Monomial out = Monomial::one(extended_arity);
  std::copy(m.exp.begin(), m.exp.end(), out.exp.begin());
  return out;
}

Polynomial embed(const Polynomial& p, const RingPtr& extended) {
  Polynomial out(extended);
  for (const auto& [m, c] : p.terms()) out.add_term(embed_monomial(m, extended->arity()), c);
  return out;
}

}  // namespace

SubalgebraOracle::SubalgebraOracle(std::vector<Polynomial> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw error("subalgebra needs at least one generator");
  base_ = generators_.front().ring();
  for (const Polynomial& f : generators_) {
    if (f.is_zero()) throw error("subalgebra generators must be nonzero");
    if (!f.ring()->same_as(*base_)) throw ring_mismatch("generators live in different rings");
  }
  const int n = base_->arity();
  const int r = static_cast<int>(generators_.size());
  source_ = witness_ring(r);

  // Tag variables, renamed until they avoid the base names.
  std::vector<std::string> names = base_->variables();
  std::string prefix = "t";
  for (bool clash = true; clash;) {
    clash = false;
    for (int i = 1; i <= r; ++i) {
      if (base_->variable_index(prefix + std::to_string(i)) >= 0) clash = true;
    }
    if (clash) prefix = "_" + prefix;
  }
  for (int i = 1; i <= r; ++i) names.push_back(prefix + std::to_string(i));
  extended_ = PolyRing::create(std::move(names), {OrderKind::Block, n});

  std::vector<Polynomial> ideal;
  ideal.reserve(r);
  for (int i = 0; i < r; ++i) {
    Polynomial tag = Polynomial::variable(extended_, n + i);
    ideal.push_back(tag - embed(generators_[i], extended_));
  }
  gb_ = buchberger(std::move(ideal));
}

MembershipResult SubalgebraOracle::membership(const Polynomial& h) const {
  if (!h.ring()->same_as(*base_)) throw ring_mismatch("membership query outside the base ring");
  const int n = base_->arity();
  const int r = static_cast<int>(generators_.size());
  Polynomial nf = normal_form(embed(h, extended_), gb_);

  MembershipResult out;
  out.normal_form = nf;
  bool tags_only = true;
  for (const auto& [m, c] : nf.terms()) {
    for (int v = 0; v < n; ++v) {
      if (m.exp[v] != 0) tags_only = false;
    }
  }
  if (!tags_only) return out;

  out.member = true;
  Polynomial rep(source_);
  for (const auto& [m, c] : nf.terms()) {
    Monomial w = Monomial::one(r);
    for (int i = 0; i < r; ++i) w.exp[i] = m.exp[n + i];
    rep.add_term(w, c);
  }
  out.representation = rep;
  return out;
}

MembershipResult subalgebra_membership(const Polynomial& h,
                                       const std::vector<Polynomial>& generators) {
  return SubalgebraOracle(generators).membership(h);
}

MembershipResult subalgebra_membership(const Polynomial& h, const PolyMap& f) {
  return subalgebra_membership(h, f.images());
}

bool is_algebraic_over(const Polynomial& h, const PolyMap& f) {
  if (!h.ring()->same_as(*f.target_ring())) throw ring_mismatch("element outside the map's ring");
  if (!is_algebraically_independent(f)) {
    throw error("algebraicity test requires algebraically independent generators");
  }
  const int n = f.target_ring()->arity();
  if (f.arity() + 1 > n) return true;  // more polynomials than variables
  std::vector<Polynomial> extended = f.images();
  extended.push_back(h);
  JacobianMinors minors = jacobian_minors(PolyMap(f.target_ring(), std::move(extended)));
  for (const auto& [subset, det] : minors.minors) {
    if (!det.is_zero()) return false;
  }
  return true;
}

}  // namespace keller
