#include "keller/factor.hpp"

#include <algorithm>
#include <map>

#include "factor_internal.hpp"

namespace keller {

ContentPrimitive content_primitive(const Polynomial& p) {
  if (p.is_zero()) throw error("content of the zero polynomial");
  BigInt den_lcm(1);
  for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, c.denominator());
  BigInt num_gcd(0);
  for (const auto& [m, c] : p.terms()) {
    BigInt scaled = c.numerator() * (den_lcm / c.denominator());
    num_gcd = gcd(num_gcd, scaled);
  }
  Rational content(num_gcd, den_lcm);
  if (p.leading_coefficient().sign() < 0) content = -content;
  Polynomial primitive = p * content.inverse();
  return {content, std::move(primitive)};
}

Polynomial normalize_primitive(const Polynomial& p) {
  return content_primitive(p).primitive;
}

std::optional<Polynomial> exact_quotient(const Polynomial& q, const Polynomial& p) {
  if (p.is_zero()) throw division_by_zero();
  Polynomial quotient(q.ring());
  if (q.is_zero()) return quotient;
  if (!q.ring()->same_as(*p.ring())) throw ring_mismatch("division across rings");
  Polynomial r = q;
  const Monomial& plm = p.leading_monomial();
  const Rational& plc = p.leading_coefficient();
  while (!r.is_zero()) {
    if (!plm.divides(r.leading_monomial())) return std::nullopt;
    Monomial m = r.leading_monomial() / plm;
    Rational c = r.leading_coefficient() / plc;
    quotient.add_term(m, c);
    r -= Polynomial::term(r.ring(), m, c) * p;
  }
  return quotient;
}

bool divides(const Polynomial& p, const Polynomial& q) {
  return exact_quotient(q, p).has_value();
}

namespace {

// Present-variable bookkeeping.
std::vector<int> variables_present(const Polynomial& p) {
  std::vector<int> out;
  for (int v = 0; v < p.ring()->arity(); ++v) {
    if (p.degree_in(v) > 0) out.push_back(v);
  }
  return out;
}

// View of p as a dense univariate polynomial in `var` whose coefficients
// are polynomials with the var-exponent zeroed out.
std::vector<Polynomial> univariate_view(const Polynomial& p, int var) {
  std::vector<Polynomial> coeff(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1,
                                Polynomial(p.ring()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int e = rest.exp[var];
    rest.exp[var] = 0;
    coeff[e].add_term(rest, c);
  }
  return coeff;
}

Polynomial from_univariate_view(const std::vector<Polynomial>& coeff, int var,
                                const RingPtr& ring) {
  Polynomial p(ring);
  for (std::size_t e = 0; e < coeff.size(); ++e) {
    for (const auto& [m, c] : coeff[e].terms()) {
      Monomial full = m;
      full.exp[var] = static_cast<int>(e);
      p.add_term(full, c);
    }
  }
  return p;
}

int view_degree(const std::vector<Polynomial>& f) {
  for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d) {
    if (!f[d].is_zero()) return d;
  }
  return -1;
}

// Integer gcd of two constant polynomials (integer contents).
Polynomial constant_int_gcd(const Polynomial& a, const Polynomial& b) {
  BigInt g = gcd(a.constant_value().numerator(), b.constant_value().numerator());
  return Polynomial::constant(a.ring(), Rational(g, BigInt(1)));
}

Polynomial gcd_primitive_integer(const Polynomial& a, const Polynomial& b);

// Fold an integer gcd across a coefficient list (all integer polynomials).
Polynomial integer_gcd_fold(const std::vector<Polynomial>& polys, const RingPtr& ring) {
  Polynomial g(ring);
  for (const Polynomial& c : polys) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_primitive_integer(g, c);
    if (g.is_constant() && g.constant_value().abs() == Rational(1)) break;
  }
  return g;
}

// Pseudo-remainder of A by B in one variable: lc(B)^(deg A - deg B + 1) * A
// reduced by B. Views must be nonzero with deg A >= deg B >= 0.
std::vector<Polynomial> pseudo_remainder(std::vector<Polynomial> r,
                                         const std::vector<Polynomial>& b) {
  int db = view_degree(b);
  const Polynomial& lead = b[db];
  int dr = view_degree(r);
  int steps = dr - db + 1;
  while (dr >= db && dr >= 0) {
    Polynomial t = r[dr];
    for (int i = 0; i <= dr; ++i) r[i] = r[i] * lead;
    for (int i = 0; i <= db; ++i) r[i + dr - db] -= t * b[i];
    r.erase(r.begin() + dr, r.end());  // leading entry cancels exactly
    dr = view_degree(r);
    --steps;
  }
  // Pad with the remaining lc powers so the total multiplier is exact.
  if (steps > 0) {
    Polynomial scale = lead.pow(steps);
    for (auto& c : r) c = c * scale;
  }
  return r;
}

Polynomial must_divide(const Polynomial& q, const Polynomial& p) {
  auto h = exact_quotient(q, p);
  if (!h) throw error("internal: expected exact polynomial division");
  return *h;
}

// gcd over Z[x_1..x_n] of integer-coefficient polynomials (sign-ambiguous,
// includes the integer content). Subresultant PRS in the main variable.
Polynomial gcd_primitive_integer(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a == b) return a;
  if (a.is_constant() && b.is_constant()) return constant_int_gcd(a, b);

  // Cheap win: one argument divides the other.
  const Polynomial* lo = &a;
  const Polynomial* hi = &b;
  if (lo->total_degree() > hi->total_degree()) std::swap(lo, hi);
  if (!lo->is_constant() && divides(*lo, *hi)) return *lo;

  // Main variable: present in both if possible, minimizing the smaller
  // degree (shortest remainder sequence).
  int var = -1;
  long best = -1;
  for (int v = 0; v < a.ring()->arity(); ++v) {
    int da = a.degree_in(v);
    int db = b.degree_in(v);
    if (da <= 0 && db <= 0) continue;
    long score;
    if (da > 0 && db > 0) {
      score = std::min(da, db);
    } else {
      score = 1000000L + std::max(da, db);  // fall back to one-sided variables
    }
    if (var < 0 || score < best) {
      var = v;
      best = score;
    }
  }
  if (var < 0) return constant_int_gcd(a, b);  // both constant in every variable

  std::vector<Polynomial> A = univariate_view(a, var);
  std::vector<Polynomial> B = univariate_view(b, var);
  const RingPtr& ring = a.ring();

  Polynomial cont_a = integer_gcd_fold(A, ring);
  Polynomial cont_b = integer_gcd_fold(B, ring);
  Polynomial gamma = gcd_primitive_integer(cont_a, cont_b);
  for (auto& c : A) {
    if (!c.is_zero()) c = must_divide(c, cont_a);
  }
  for (auto& c : B) {
    if (!c.is_zero()) c = must_divide(c, cont_b);
  }

  if (view_degree(A) < view_degree(B)) std::swap(A, B);
  if (view_degree(B) == 0) {
    // B is now primitive of degree zero in var, i.e. a unit times content 1.
    return gamma;
  }

  Polynomial g = Polynomial::constant(ring, 1);
  Polynomial h = Polynomial::constant(ring, 1);
  while (true) {
    int da = view_degree(A);
    int db = view_degree(B);
    int delta = da - db;
    std::vector<Polynomial> R = pseudo_remainder(A, B);
    if (view_degree(R) < 0) break;
    A = std::move(B);
    Polynomial divisor = g * h.pow(delta);
    for (auto& c : R) {
      if (!c.is_zero()) c = must_divide(c, divisor);
    }
    B = std::move(R);
    if (view_degree(B) == 0) break;
    g = A[view_degree(A)];
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = must_divide(g.pow(delta), h.pow(delta - 1));
    }
  }

  if (view_degree(B) == 0) return gamma;  // pseudo-division bottomed out at a unit
  Polynomial result = from_univariate_view(B, var, ring);
  Polynomial cont = integer_gcd_fold(B, ring);
  result = must_divide(result, cont);
  return gamma * result;
}

}  // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw error("gcd(0, 0) is undefined");
  if (p.is_zero()) return normalize_primitive(q);
  if (q.is_zero()) return normalize_primitive(p);
  if (!p.ring()->same_as(*q.ring())) throw ring_mismatch("gcd across rings");
  Polynomial a = normalize_primitive(p);
  Polynomial b = normalize_primitive(q);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(p.ring(), 1);
  return normalize_primitive(gcd_primitive_integer(a, b));
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw error("square-freeness of the zero polynomial");
  if (p.is_constant()) return true;
  Polynomial acc = normalize_primitive(p);
  for (int v : variables_present(p)) {
    Polynomial d = p.derivative(v);
    if (d.is_zero()) continue;
    acc = gcd(acc, d);
    if (acc.is_constant()) return true;
  }
  return acc.is_constant();
}

Polynomial SquareFreeDecomposition::reassemble() const {
  if (parts.empty()) throw error("empty decomposition has no ring");
  Polynomial p = Polynomial::constant(parts.front().factor.ring(), unit);
  for (const auto& part : parts) p = p * part.factor.pow(part.multiplicity);
  return p;
}

namespace {

void decompose_into(const Polynomial& q, std::map<int, Polynomial>& parts, Rational& unit) {
  if (q.is_constant()) {
    unit *= q.constant_value();
    return;
  }
  int var = variables_present(q).front();
  std::vector<Polynomial> view = univariate_view(q, var);
  Polynomial cont = normalize_primitive(integer_gcd_fold(view, q.ring()));
  Polynomial pp = q;
  if (!cont.is_constant()) {
    pp = must_divide(q, cont);
    decompose_into(cont, parts, unit);
  }

  // Yun's algorithm in `var`; every irreducible factor of pp involves var.
  Polynomial dp = pp.derivative(var);
  Polynomial g = gcd(pp, dp);
  Polynomial c = must_divide(pp, g);
  Polynomial d = must_divide(dp, g) - c.derivative(var);
  int multiplicity = 1;
  while (!c.is_constant()) {
    Polynomial s = gcd(c, d);
    if (!s.is_constant()) {
      auto [it, inserted] = parts.emplace(multiplicity, s);
      if (!inserted) it->second = it->second * s;
    }
    c = must_divide(c, s);
    d = must_divide(d, s) - c.derivative(var);
    ++multiplicity;
  }
  unit *= c.constant_value();
}

}  // namespace

SquareFreeDecomposition squarefree_decompose(const Polynomial& p) {
  if (p.is_zero()) throw error("square-free decomposition of the zero polynomial");
  auto [content, primitive] = content_primitive(p);
  SquareFreeDecomposition out;
  out.unit = content;
  std::map<int, Polynomial> parts;
  decompose_into(primitive, parts, out.unit);
  for (auto& [multiplicity, factor] : parts) {
    out.parts.push_back({std::move(factor), multiplicity});
  }
  return out;
}

Polynomial Factorization::reassemble() const {
  if (factors.empty()) throw error("empty factorization has no ring");
  Polynomial p = Polynomial::constant(factors.front().factor.ring(), unit);
  for (const auto& part : factors) p = p * part.factor.pow(part.multiplicity);
  return p;
}

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
  if (int d = a.total_degree() - b.total_degree(); d != 0) return d < 0 ? -1 : 1;
  auto it = a.terms().begin();
  auto jt = b.terms().begin();
  for (; it != a.terms().end() && jt != b.terms().end(); ++it, ++jt) {
    int c = a.ring()->compare(it->first, jt->first);
    if (c != 0) return c;
    if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
  }
  if (it != a.terms().end()) return 1;
  if (jt != b.terms().end()) return -1;
  return 0;
}

namespace {

// --- conversions between one-variable polynomials and dense ZPoly ---

detail::ZPoly to_zpoly(const Polynomial& p, int var) {
  detail::ZPoly out(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, BigInt(0));
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_integer()) throw error("internal: integer polynomial expected");
    out[m.exp[var]] = c.numerator();
  }
  detail::ztrim(out);
  return out;
}

Polynomial from_zpoly(const detail::ZPoly& f, int var, const RingPtr& ring) {
  Polynomial p(ring);
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (f[e].is_zero()) continue;
    Monomial m = Monomial::one(ring->arity());
    m.exp[var] = static_cast<int>(e);
    p.add_term(m, Rational(f[e], BigInt(1)));
  }
  return p;
}

void sort_factors(std::vector<FactorPart>& factors) {
  std::sort(factors.begin(), factors.end(), [](const FactorPart& x, const FactorPart& y) {
    int c = compare_polynomials(x.factor, y.factor);
    if (c != 0) return c < 0;
    return x.multiplicity < y.multiplicity;
  });
}

std::vector<Polynomial> factor_squarefree_one_var(const Polynomial& s, int var) {
  detail::ZPoly zf = to_zpoly(s, var);
  std::vector<detail::ZPoly> zfactors = detail::factor_squarefree_integer(zf);
  std::vector<Polynomial> out;
  out.reserve(zfactors.size());
  for (const auto& zf2 : zfactors) out.push_back(from_zpoly(zf2, var, s.ring()));
  return out;
}

// --- packed-exponent reduction for multivariate factor search ---

struct Packing {
  std::vector<int> vars;    // variable indices, in ring order
  std::vector<long> radix;  // cumulative radix per slot
  RingPtr line;             // one-variable scratch ring
};

Packing make_packing(const Polynomial& q) {
  Packing pk;
  pk.vars = variables_present(q);
  long stride = 1;
  for (int v : pk.vars) {
    pk.radix.push_back(stride);
    long width = q.degree_in(v) + 1;
    if (stride > 2'000'000 / width) {
      throw error("polynomial too large for packed univariate factorization");
    }
    stride *= width;
  }
  pk.line = PolyRing::create({"t"});
  return pk;
}

Polynomial pack(const Polynomial& q, const Packing& pk) {
  Polynomial u(pk.line);
  for (const auto& [m, c] : q.terms()) {
    long e = 0;
    for (std::size_t j = 0; j < pk.vars.size(); ++j) e += m.exp[pk.vars[j]] * pk.radix[j];
    Monomial mono = Monomial::one(1);
    mono.exp[0] = static_cast<int>(e);
    u.add_term(mono, c);
  }
  return u;
}

Polynomial unpack(const Polynomial& u, const Packing& pk, const Polynomial& q) {
  Polynomial out(q.ring());
  for (const auto& [m, c] : u.terms()) {
    long e = m.exp[0];
    Monomial mono = Monomial::one(q.ring()->arity());
    for (std::size_t j = pk.vars.size(); j-- > 0;) {
      long digit = e / pk.radix[j];
      e -= digit * pk.radix[j];
      // Digits can overflow the per-variable width for candidates that do
      // not correspond to true factors; those fail the division check.
      mono.exp[pk.vars[j]] = static_cast<int>(digit);
    }
    out.add_term(mono, c);
  }
  return out;
}

// A nonconstant proper divisor of the primitive polynomial q (at least two
// variables present), or nullopt when q is irreducible.
std::optional<Polynomial> proper_divisor_multivariate(const Polynomial& q) {
  // Content with respect to some variable splits q immediately.
  for (int v : variables_present(q)) {
    Polynomial cont = normalize_primitive(
        integer_gcd_fold(univariate_view(q, v), q.ring()));
    if (!cont.is_constant()) return cont;
    // Linear in v with trivial content: irreducible; degree >= 2 continues.
    if (q.degree_in(v) == 1) return std::nullopt;
  }
  if (q.total_degree() <= 1) return std::nullopt;

  Packing pk = make_packing(q);
  Polynomial u = pack(q, pk);
  Factorization uf = factor_univariate(u);
  if (uf.factors.size() == 1 && uf.factors.front().multiplicity == 1) return std::nullopt;

  // Enumerate sub-multisets of the packed factorization, smallest total
  // degree first, and keep the first one that unpacks to a true divisor.
  const auto& parts = uf.factors;
  std::vector<int> take(parts.size(), 0);
  struct Candidate {
    long degree;
    std::vector<int> take;
  };
  std::vector<Candidate> candidates;
  while (true) {
    std::size_t i = 0;
    while (i < take.size() && take[i] == parts[i].multiplicity) {
      take[i] = 0;
      ++i;
    }
    if (i == take.size()) break;
    ++take[i];
    bool all = true;
    for (std::size_t j = 0; j < take.size(); ++j) {
      if (take[j] != parts[j].multiplicity) all = false;
    }
    if (all) continue;
    long degree = 0;
    for (std::size_t j = 0; j < take.size(); ++j) {
      degree += static_cast<long>(take[j]) * parts[j].factor.total_degree();
    }
    candidates.push_back({degree, take});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.take < b.take;
            });

  for (const auto& cand : candidates) {
    Polynomial prod = Polynomial::constant(pk.line, 1);
    for (std::size_t j = 0; j < cand.take.size(); ++j) {
      if (cand.take[j] > 0) prod = prod * parts[j].factor.pow(cand.take[j]);
    }
    Polynomial h = unpack(prod, pk, q);
    if (h.is_zero() || h.is_constant()) continue;
    h = normalize_primitive(h);
    auto quotient = exact_quotient(q, h);
    if (quotient && !quotient->is_constant()) return h;
  }
  return std::nullopt;
}

void split_irreducible(const Polynomial& s, std::vector<Polynomial>& out) {
  std::vector<int> vars = variables_present(s);
  if (vars.size() == 1) {
    auto fs = factor_squarefree_one_var(s, vars.front());
    out.insert(out.end(), fs.begin(), fs.end());
    return;
  }
  auto d = proper_divisor_multivariate(s);
  if (!d) {
    out.push_back(s);
    return;
  }
  split_irreducible(normalize_primitive(*d), out);
  split_irreducible(normalize_primitive(must_divide(s, *d)), out);
}

}  // namespace

Factorization factor_univariate(const Polynomial& p) {
  if (p.is_zero()) throw error("factorization of the zero polynomial");
  std::vector<int> vars = variables_present(p);
  if (vars.size() > 1) throw error("factor_univariate requires a univariate input");
  auto [content, primitive] = content_primitive(p);
  Factorization out;
  out.unit = content;
  if (primitive.is_constant()) return out;
  int var = vars.front();

  SquareFreeDecomposition sqf = squarefree_decompose(primitive);
  out.unit *= sqf.unit;
  for (const auto& part : sqf.parts) {
    for (const Polynomial& f : factor_squarefree_one_var(part.factor, var)) {
      out.factors.push_back({f, part.multiplicity});
    }
  }
  sort_factors(out.factors);
  return out;
}

Factorization factor(const Polynomial& p) {
  if (p.is_zero()) throw error("factorization of the zero polynomial");
  std::vector<int> vars = variables_present(p);
  if (vars.size() <= 1) return factor_univariate(p);
  auto [content, primitive] = content_primitive(p);
  Factorization out;
  out.unit = content;
  SquareFreeDecomposition sqf = squarefree_decompose(primitive);
  out.unit *= sqf.unit;
  for (const auto& part : sqf.parts) {
    std::vector<Polynomial> irreducibles;
    split_irreducible(part.factor, irreducibles);
    for (const Polynomial& f : irreducibles) out.factors.push_back({f, part.multiplicity});
  }
  sort_factors(out.factors);
  return out;
}

bool is_irreducible(const Polynomial& p) {
  if (p.is_zero()) throw error("irreducibility of the zero polynomial");
  if (p.is_constant()) throw error("irreducibility of a constant (units are excluded)");
  Polynomial q = normalize_primitive(p);
  std::vector<int> vars = variables_present(q);
  if (q.total_degree() == 1) return true;
  if (vars.size() == 1) {
    if (!is_squarefree(q)) return false;
    return detail::factor_squarefree_integer(to_zpoly(q, vars.front())).size() == 1;
  }
  if (!is_squarefree(q)) return false;
  return !proper_divisor_multivariate(q).has_value();
}

Polynomial some_irreducible_factor(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) throw error("no irreducible factor of a unit or zero");
  Polynomial q = normalize_primitive(p);
  while (true) {
    std::vector<int> vars = variables_present(q);
    if (q.total_degree() == 1) return q;
    SquareFreeDecomposition sqf = squarefree_decompose(q);
    q = sqf.parts.front().factor;
    if (vars.size() == 1 || variables_present(q).size() == 1) {
      int var = variables_present(q).front();
      return factor_squarefree_one_var(q, var).front();
    }
    auto d = proper_divisor_multivariate(q);
    if (!d) return q;
    q = normalize_primitive(*d);
  }
}

}  // namespace keller
