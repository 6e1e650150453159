#include "keller/harness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "keller/factor.hpp"
#include "keller/linalg.hpp"
#include "keller/parse.hpp"

namespace keller {

std::vector<Monomial> monomials_up_to(const RingPtr& ring, int degree) {
  const int n = ring->arity();
  std::vector<Monomial> out;
  Monomial current = Monomial::one(n);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current.exp[var] = e;
      self(self, var + 1, remaining - e);
    }
    current.exp[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; });
  return out;
}

namespace {

// Remainder of division by the single divisor d: no term of the result is
// divisible by the leading monomial of d. Canonical (principal ideals have
// confluent reduction), and linear in the dividend.
Polynomial remainder_single(const Polynomial& h, const Polynomial& d) {
  Polynomial rem(h.ring());
  Polynomial work = h;
  const Monomial& dlm = d.leading_monomial();
  const Rational& dlc = d.leading_coefficient();
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const Rational& lc = work.leading_coefficient();
    if (dlm.divides(lm)) {
      work -= Polynomial::term(work.ring(), lm / dlm, lc / dlc) * d;
    } else {
      rem.add_term(lm, lc);
      work -= Polynomial::term(work.ring(), lm, lc);
    }
  }
  return rem;
}

// Rows of an exact linear system over the unknowns: one constraint group is
// a list of target-ring polynomials (one per unknown) that must combine to
// zero.
struct LinearSystem {
  std::vector<std::vector<Rational>> rows;

  void add_group(const std::vector<Polynomial>& per_unknown) {
    if (per_unknown.empty()) return;
    const RingPtr& ring = per_unknown.front().ring();
    std::map<Monomial, int, Polynomial::TermCompare> row_of{Polynomial::TermCompare{ring}};
    for (const Polynomial& p : per_unknown) {
      for (const auto& [m, c] : p.terms()) {
        if (!row_of.count(m)) {
          int idx = static_cast<int>(rows.size());
          row_of.emplace(m, idx);
          rows.emplace_back(per_unknown.size(), Rational(0));
        }
      }
    }
    for (std::size_t col = 0; col < per_unknown.size(); ++col) {
      for (const auto& [m, c] : per_unknown[col].terms()) {
        rows[row_of.at(m)][col] = c;
      }
    }
  }

  std::vector<std::vector<Rational>> nullspace(int unknowns) const {
    QMatrix m(std::max<int>(1, static_cast<int>(rows.size())), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (int c = 0; c < unknowns; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
    }
    return nullspace_basis(std::move(m));
  }
};

Polynomial vector_to_poly(const std::vector<Rational>& v, const std::vector<Monomial>& monos,
                          const RingPtr& ring, std::size_t count) {
  Polynomial p(ring);
  for (std::size_t i = 0; i < count; ++i) p.add_term(monos[i], v[i]);
  return p;
}

}  // namespace

WitnessResult witness_search(const PolyMap& f, const Polynomial& g, int max_degree,
                             WitnessKind kind, const WitnessOptions& opts) {
  for (const Polynomial& fi : f.images()) {
    if (fi.is_zero()) throw error("witness search requires nonzero map images");
  }
  if (!is_irreducible(g)) throw error("witness search requires an irreducible g");
  if (max_degree < 1) throw error("witness search needs max_degree >= 1");

  const RingPtr& source = f.source_ring();
  const Polynomial g2 = g * g;
  std::vector<Monomial> monos = monomials_up_to(source, max_degree);

  WitnessResult result;
  result.kind = kind;

  // Reduced images of the source monomials modulo g^2, extended lazily.
  std::vector<Polynomial> reduced;
  auto extend_reduced = [&](std::size_t count) {
    while (reduced.size() < count) {
      const Monomial& m = monos[reduced.size()];
      Polynomial mono_poly = Polynomial::term(source, m, Rational(1));
      reduced.push_back(remainder_single(substitute(mono_poly, f), g2));
    }
  };

  auto passes_kind = [&](const Polynomial& w) {
    if (w.is_constant()) return false;
    return kind == WitnessKind::Irreducible ? is_irreducible(w) : is_squarefree(w);
  };

  for (int d = 1; d <= max_degree; ++d) {
    result.degree_searched = d;
    std::size_t cols = 0;
    while (cols < monos.size() && monos[cols].degree() <= d) ++cols;
    extend_reduced(cols);

    LinearSystem system;
    system.add_group(std::vector<Polynomial>(reduced.begin(), reduced.begin() + cols));
    auto basis = system.nullspace(static_cast<int>(cols));
    result.nullspace_dims.push_back(static_cast<int>(basis.size()));
    if (basis.empty()) continue;

    std::set<std::string> seen;
    auto try_candidate = [&](const std::vector<Rational>& v) -> std::optional<Polynomial> {
      Polynomial w = vector_to_poly(v, monos, source, cols);
      if (w.is_zero()) return std::nullopt;
      w = normalize_primitive(w);
      if (!seen.insert(to_string(w)).second) return std::nullopt;
      if (!passes_kind(w)) return std::nullopt;
      return w;
    };

    std::optional<Polynomial> found;
    for (const auto& v : basis) {
      found = try_candidate(v);
      if (found) break;
    }
    if (!found && basis.size() > 1) {
      const int K = std::min<int>(static_cast<int>(basis.size()), opts.max_combo_vectors);
      const int C = opts.comb_bound;
      std::vector<int> lambda(K, -C);
      while (!found) {
        bool all_zero = std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; });
        if (!all_zero) {
          std::vector<Rational> v(cols, Rational(0));
          for (int k = 0; k < K; ++k) {
            if (lambda[k] == 0) continue;
            for (std::size_t i = 0; i < cols; ++i) v[i] += Rational(lambda[k]) * basis[k][i];
          }
          found = try_candidate(v);
          if (found) break;
        }
        int k = 0;
        while (k < K && lambda[k] == C) lambda[k++] = -C;
        if (k == K) break;
        ++lambda[k];
      }
    }
    if (found) {
      result.outcome = SearchOutcome::Found;
      result.found_degree = d;
      result.witness = *found;
      auto cert = exact_quotient(substitute(*found, f), g2);
      if (!cert) throw error("internal: nullspace witness failed the divisibility certificate");
      result.certificate = *cert;
      return result;
    }
  }
  result.outcome = SearchOutcome::NoneUpToBound;
  return result;
}

EquivalenceVerdict check_thm24(const PolyMap& f, const Polynomial& g, int max_degree,
                               const WitnessOptions& opts) {
  EquivalenceVerdict verdict;
  JacobianMinors minors = jacobian_minors(f);
  bool cond_i = true;
  for (const auto& [subset, det] : minors.minors) {
    if (det.is_zero()) continue;
    if (!divides(g, det)) {
      cond_i = false;
      break;
    }
  }

  WitnessResult irr = witness_search(f, g, max_degree, WitnessKind::Irreducible, opts);
  WitnessResult sqf = witness_search(f, g, max_degree, WitnessKind::SquareFree, opts);

  auto derived = [&](const WitnessResult& ws) {
    if (ws.outcome == SearchOutcome::Found) return ConditionStatus::Holds;
    return cond_i ? ConditionStatus::UnknownUpToBound : ConditionStatus::Fails;
  };
  verdict.conditions = {{"i", cond_i ? ConditionStatus::Holds : ConditionStatus::Fails},
                        {"ii", derived(irr)},
                        {"iii", derived(sqf)}};

  for (const WitnessResult* ws : {&irr, &sqf}) {
    if (ws->outcome != SearchOutcome::Found) continue;
    if (!cond_i) {
      Certificate violation;
      violation.description =
          std::string("witness of kind ") +
          (ws->kind == WitnessKind::Irreducible ? "irreducible" : "square-free") +
          " found although g does not divide every minor";
      violation.items.push_back({"g", g});
      violation.items.push_back({"w", *ws->witness});
      violation.items.push_back({"certificate", *ws->certificate});
      verdict.violations.push_back(std::move(violation));
      verdict.consistent_with_theorem = false;
    } else {
      Certificate exhibit;
      exhibit.description =
          std::string(ws->kind == WitnessKind::Irreducible ? "irreducible" : "square-free") +
          " witness with certified divisibility";
      exhibit.items.push_back({"w", *ws->witness});
      exhibit.items.push_back({"certificate", *ws->certificate});
      verdict.exhibits.push_back(std::move(exhibit));
    }
  }
  if (cond_i && irr.outcome == SearchOutcome::NoneUpToBound &&
      sqf.outcome == SearchOutcome::NoneUpToBound) {
    verdict.notes.push_back(
        "divisibility of all minors holds, so a witness exists at some degree; none found "
        "within the searched bound");
  }
  if (!cond_i) {
    verdict.notes.push_back(
        "no witness of either kind can exist; bounded searches found none, as required");
  }
  return verdict;
}

EquivalenceVerdict check_keller_preservation(const PolyMap& phi,
                                             const std::vector<Polynomial>& sample_ws,
                                             int max_degree, const WitnessOptions& opts) {
  if (phi.arity() != phi.target_ring()->arity()) {
    throw error("preservation check requires an endomorphism (r = n)");
  }
  EquivalenceVerdict verdict;
  Polynomial jac = poly_determinant(jacobian_matrix(phi), phi.target_ring());
  bool keller = !jac.is_zero() && jac.total_degree() == 0;

  bool sampled_sqf_failure = false;
  bool sampled_irr_failure = false;
  for (const Polynomial& w : sample_ws) {
    if (w.is_zero()) throw error("sample polynomials must be nonzero");
    bool w_sqf = is_squarefree(w);
    bool w_irr = !w.is_constant() && is_irreducible(w);
    Polynomial image = substitute(w, phi);
    bool image_sqf = !image.is_zero() && is_squarefree(image);
    if (w_sqf && !image_sqf) {
      Certificate cert;
      cert.description = "square-free sample with non-square-free image";
      cert.items.push_back({"w", w});
      cert.items.push_back({"image", image});
      if (keller) {
        cert.description += " although the Jacobian determinant is constant";
        verdict.violations.push_back(std::move(cert));
        verdict.consistent_with_theorem = false;
      } else {
        verdict.exhibits.push_back(std::move(cert));
      }
      sampled_sqf_failure = true;
      if (w_irr) sampled_irr_failure = true;
    }
  }

  ConditionStatus ii = ConditionStatus::Holds;
  ConditionStatus iii = ConditionStatus::Holds;
  if (keller) {
    verdict.notes.push_back("conditions (ii)/(iii) checked on samples only");
    if (!verdict.consistent_with_theorem) {
      ii = sampled_irr_failure ? ConditionStatus::Fails : ConditionStatus::Holds;
      iii = ConditionStatus::Fails;
    }
  } else {
    ii = sampled_irr_failure ? ConditionStatus::Fails : ConditionStatus::UnknownUpToBound;
    iii = sampled_sqf_failure ? ConditionStatus::Fails : ConditionStatus::UnknownUpToBound;
    if (!sampled_sqf_failure) {
      if (!jac.is_zero() && !jac.is_constant()) {
        Polynomial g = some_irreducible_factor(jac);
        WitnessResult ws = witness_search(phi, g, max_degree, WitnessKind::SquareFree, opts);
        if (ws.outcome == SearchOutcome::Found) {
          Polynomial image = substitute(*ws.witness, phi);
          Certificate cert;
          cert.description =
              "square-free witness whose image is divisible by the square of a Jacobian factor";
          cert.items.push_back({"g", g});
          cert.items.push_back({"w", *ws.witness});
          cert.items.push_back({"image", image});
          cert.items.push_back({"certificate", *ws.certificate});
          verdict.exhibits.push_back(std::move(cert));
          iii = ConditionStatus::Fails;
          if (!(*ws.witness).is_constant() && is_irreducible(*ws.witness)) {
            ii = ConditionStatus::Fails;
          }
        } else {
          verdict.notes.push_back(
              "non-constant Jacobian determinant, but no failing witness found within the "
              "degree bound");
        }
      } else {
        verdict.notes.push_back(
            "Jacobian determinant is zero; constructive witness search skipped");
      }
    }
  }
  verdict.conditions = {{"i", keller ? ConditionStatus::Holds : ConditionStatus::Fails},
                        {"ii", ii},
                        {"iii", iii}};
  return verdict;
}

FalsifierReport jc_falsifier(const PolyMap& f, int search_degree) {
  DgcdResult dg = dgcd(f);
  if (!dg.is_constant_nonzero) {
    throw error("jc falsifier hypothesis violated: differential gcd is " + to_string(dg.value));
  }
  const RingPtr& ring = f.target_ring();
  const int n = ring->arity();
  const int r = f.arity();

  FalsifierReport report;
  report.exhausted_bounds.push_back({"search_degree", search_degree});
  std::vector<Monomial> monos = monomials_up_to(ring, search_degree);

  std::vector<Polynomial> candidates;
  if (r == n) {
    // No larger minors exist: every h is algebraic over the image algebra.
    for (const Monomial& m : monos) {
      candidates.push_back(Polynomial::term(ring, m, Rational(1)));
    }
    report.notes.push_back("r = n: the whole bounded-degree space is algebraic");
  } else {
    JacobianMinors minors = jacobian_minors(f);
    LinearSystem system;
    // Enumerate (r+1)-subsets of variables; each yields one constraint group
    // via cofactor expansion along the unknown row.
    std::vector<int> stack;
    auto emit = [&](const std::vector<int>& s) {
      std::vector<Polynomial> per_unknown;
      per_unknown.reserve(monos.size());
      for (const Monomial& m : monos) {
        Polynomial mono_poly = Polynomial::term(ring, m, Rational(1));
        Polynomial constraint(ring);
        for (std::size_t l = 0; l < s.size(); ++l) {
          std::vector<int> rest;
          for (std::size_t t = 0; t < s.size(); ++t) {
            if (t != l) rest.push_back(s[t]);
          }
          Polynomial minor = minors.minors.at(rest);
          Polynomial part = minor * mono_poly.derivative(s[l]);
          if ((r + l) % 2 == 1) part = -part;
          constraint += part;
        }
        per_unknown.push_back(std::move(constraint));
      }
      system.add_group(per_unknown);
    };
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(stack.size()) == r + 1) {
        emit(stack);
        return;
      }
      for (int v = start; v < n; ++v) {
        stack.push_back(v);
        self(self, v + 1);
        stack.pop_back();
      }
    };
    rec(rec, 0);

    for (const auto& v : system.nullspace(static_cast<int>(monos.size()))) {
      candidates.push_back(vector_to_poly(v, monos, ring, monos.size()));
    }
  }

  SubalgebraOracle oracle(f.images());
  for (const Polynomial& h : candidates) {
    if (h.is_constant()) continue;
    ++report.samples_tried;
    MembershipResult mem = oracle.membership(h);
    if (!mem.member) {
      Certificate cert;
      cert.description =
          "algebraic element outside the subalgebra (all extended Jacobian minors vanish, "
          "normal form contains original variables)";
      cert.items.push_back({"h", h});
      if (mem.normal_form) cert.items.push_back({"normal_form", *mem.normal_form});
      report.counterexamples.push_back(std::move(cert));
    }
  }
  return report;
}

namespace {

FalsifierReport sqf_closed_impl(const SubalgebraOracle& oracle,
                                const std::vector<Polynomial>& sample_ws) {
  FalsifierReport report;
  const int r = static_cast<int>(oracle.generators().size());
  long pairs = 0;
  for (const Polynomial& w : sample_ws) {
    if (w.ring()->arity() != r) throw error("sample arity does not match the generator count");
    ++report.samples_tried;
    if (w.is_zero() || w.is_constant()) continue;
    Polynomial p = substitute(w, oracle.generators());
    if (p.is_zero()) continue;
    SquareFreeDecomposition dec = squarefree_decompose(p);

    // All splittings p = x^2 y: x runs over divisors of the square part
    // (products of the parts to at most half their multiplicity).
    std::vector<int> caps;
    for (const auto& part : dec.parts) caps.push_back(part.multiplicity / 2);
    std::vector<int> take(caps.size(), 0);
    while (true) {
      Polynomial xhat = Polynomial::constant(p.ring(), 1);
      for (std::size_t i = 0; i < take.size(); ++i) {
        if (take[i] > 0) xhat = xhat * dec.parts[i].factor.pow(take[i]);
      }
      auto yhat = exact_quotient(p, xhat * xhat);
      if (!yhat) throw error("internal: square divisor does not divide the sample");
      if (is_squarefree(*yhat)) {
        ++pairs;
        bool x_in = xhat.is_constant() || oracle.membership(xhat).member;
        bool y_in = yhat->is_constant() || oracle.membership(*yhat).member;
        if (!x_in || !y_in) {
          Certificate cert;
          cert.description = std::string("sample w(f) = x^2*y with square-free y, but ") +
                             (!x_in ? "x" : "y") + " lies outside the subalgebra";
          cert.items.push_back({"w", w});
          cert.items.push_back({"p", p});
          cert.items.push_back({"x", xhat});
          cert.items.push_back({"y", *yhat});
          report.counterexamples.push_back(std::move(cert));
        }
      }
      std::size_t i = 0;
      while (i < take.size() && take[i] == caps[i]) take[i++] = 0;
      if (i == take.size()) break;
      ++take[i];
    }
  }
  report.exhausted_bounds.push_back({"square_divisor_pairs_tested", pairs});
  return report;
}

}  // namespace

FalsifierReport sqf_closed_check(const std::vector<Polynomial>& generators,
                                 const std::vector<Polynomial>& sample_ws) {
  SubalgebraOracle oracle(generators);
  for (const Polynomial& g : generators) {
    if (g.is_zero()) throw error("generators must be nonzero");
  }
  return sqf_closed_impl(oracle, sample_ws);
}

FalsifierReport sqf_closed_check(const PolyMap& f, const std::vector<Polynomial>& sample_ws) {
  if (!is_algebraically_independent(f)) {
    throw error("square-factorial check requires algebraically independent images");
  }
  SubalgebraOracle oracle(f.images());
  return sqf_closed_impl(oracle, sample_ws);
}

FalsifierReport root_closed_check(const std::vector<Polynomial>& generators,
                                  int candidate_degree, int max_power,
                                  const RootClosedOptions& opts) {
  SubalgebraOracle oracle(generators);
  const RingPtr& ring = oracle.base_ring();
  FalsifierReport report;
  report.exhausted_bounds.push_back({"candidate_degree", candidate_degree});
  report.exhausted_bounds.push_back({"max_power", max_power});

  std::vector<Polynomial> candidates;
  std::vector<Monomial> monos = monomials_up_to(ring, candidate_degree);
  for (const Monomial& m : monos) {
    if (m.is_one()) continue;
    candidates.push_back(Polynomial::term(ring, m, Rational(1)));
  }
  if (opts.pair_combinations) {
    std::size_t base = candidates.size();
    for (std::size_t i = 0; i < base && candidates.size() < static_cast<std::size_t>(opts.max_candidates); ++i) {
      for (std::size_t j = i + 1; j < base && candidates.size() < static_cast<std::size_t>(opts.max_candidates); ++j) {
        candidates.push_back(candidates[i] + candidates[j]);
        Polynomial diff = candidates[i] - candidates[j];
        if (!diff.is_zero()) candidates.push_back(std::move(diff));
      }
    }
  }
  if (candidates.size() > static_cast<std::size_t>(opts.max_candidates)) {
    candidates.erase(candidates.begin() + opts.max_candidates, candidates.end());
  }

  for (const Polynomial& a : candidates) {
    ++report.samples_tried;
    if (oracle.membership(a).member) continue;
    for (int m = 2; m <= max_power; ++m) {
      Polynomial am = a.pow(m);
      MembershipResult mem = oracle.membership(am);
      if (mem.member) {
        Certificate cert;
        cert.description = "a outside the subalgebra with a^" + std::to_string(m) + " inside";
        cert.items.push_back({"a", a});
        cert.items.push_back({"a_power", am});
        if (mem.representation) cert.items.push_back({"representation", *mem.representation});
        report.counterexamples.push_back(std::move(cert));
        break;
      }
    }
  }
  return report;
}

Thm62Result check_thm62_pairing(const std::vector<Polynomial>& generators,
                                const Thm62Options& opts) {
  Thm62Result result;
  result.verdict.assumed_hypotheses = {
      "unit groups coincide (R* = A*): assumed, not verified",
      "fraction-field intersection R0 with A equals R: assumed, not verified"};
  result.root_report =
      root_closed_check(generators, opts.candidate_degree, opts.max_power, opts.root_options);

  SubalgebraOracle oracle(generators);
  const int r = static_cast<int>(generators.size());
  std::vector<Polynomial> samples;
  std::set<std::string> seen;
  auto add_sample = [&](const Polynomial& w) {
    if (w.is_zero() || w.is_constant()) return;
    if (seen.insert(to_string(w)).second) samples.push_back(w);
  };

  if (result.root_report.counterexamples.empty()) {
    // Vacuous direction: probe with small generator products anyway.
    for (const Monomial& m : monomials_up_to(witness_ring(r), 2)) {
      if (!m.is_one()) add_sample(Polynomial::term(witness_ring(r), m, Rational(1)));
    }
  } else {
    // Derive samples from the powers of the first root-closure witness.
    const Certificate& ce = result.root_report.counterexamples.front();
    const Polynomial* a = nullptr;
    for (const auto& item : ce.items) {
      if (item.name == "a") a = &item.value;
    }
    std::vector<Polynomial> reps;
    for (int m = 2; m <= opts.max_power; ++m) {
      MembershipResult mem = oracle.membership(a->pow(m));
      if (mem.member && mem.representation) reps.push_back(*mem.representation);
    }
    for (const Polynomial& w : reps) add_sample(w);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i; j < reps.size(); ++j) add_sample(reps[i] * reps[j]);
    }
  }
  result.sqf_report = sqf_closed_impl(oracle, samples);

  bool root_ce = !result.root_report.counterexamples.empty();
  bool sqf_ce = !result.sqf_report.counterexamples.empty();
  result.verdict.conditions = {
      {"root_closed", root_ce ? ConditionStatus::Fails : ConditionStatus::Holds},
      {"square_factorially_closed",
       sqf_ce ? ConditionStatus::Fails
              : (root_ce ? ConditionStatus::UnknownUpToBound : ConditionStatus::Holds)}};
  if (root_ce && sqf_ce) {
    result.verdict.notes.push_back(
        "contrapositive pairing confirmed: both closedness properties fail with certificates");
  } else if (root_ce && !sqf_ce) {
    result.verdict.notes.push_back(
        "root closedness fails but no square-factorial counterexample was found within the "
        "derived samples; inconclusive, not a refutation");
  } else {
    result.verdict.notes.push_back("no root-closure counterexample found; pairing is vacuous");
  }
  result.verdict.consistent_with_theorem = true;
  return result;
}

Polynomial random_polynomial(const RingPtr& ring, int max_degree, int max_terms,
                             long coeff_bound, Rng& rng) {
  const int n = ring->arity();
  Polynomial p(ring);
  int terms = 1 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_terms)));
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(n);
    int deg = static_cast<int>(rng() % static_cast<uint64_t>(max_degree + 1));
    for (int k = 0; k < deg; ++k) m.exp[rng() % n]++;
    long c = 1 + static_cast<long>(rng() % static_cast<uint64_t>(std::max(1L, coeff_bound)));
    if (rng() % 2 == 0) c = -c;
    p.add_term(m, Rational(c));
  }
  return p;
}

PolyMap random_keller_map(const RingPtr& ring, int composition_count, int addend_degree,
                          int image_degree_cap, Rng& rng) {
  const int n = ring->arity();
  std::vector<Polynomial> identity;
  for (int i = 0; i < n; ++i) identity.push_back(Polynomial::variable(ring, i));
  PolyMap phi(ring, identity);

  int made = 0;
  int attempts = 0;
  while (made < composition_count && attempts < 20 * composition_count + 20) {
    ++attempts;
    std::vector<Polynomial> elem = identity;
    switch (rng() % 3) {
      case 0: {  // x_i += p(other variables)
        int i = static_cast<int>(rng() % n);
        Polynomial addend(ring);
        if (n > 1) {
          Polynomial raw = random_polynomial(ring, addend_degree, 3, 3, rng);
          for (const auto& [m, c] : raw.terms()) {
            if (m.exp[i] == 0) addend.add_term(m, c);
          }
        }
        if (addend.is_zero()) {
          addend = Polynomial::constant(ring, Rational(1 + static_cast<long>(rng() % 3)));
        }
        elem[i] = elem[i] + addend;
        break;
      }
      case 1: {  // swap two variables
        if (n == 1) continue;
        int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % n);
        if (i == j) j = (j + 1) % n;
        std::swap(elem[i], elem[j]);
        break;
      }
      default: {  // scale
        int i = static_cast<int>(rng() % n);
        long c = 1 + static_cast<long>(rng() % 3);
        if (rng() % 2 == 0) c = -c;
        elem[i] = elem[i] * Rational(c);
        break;
      }
    }
    PolyMap candidate = compose(phi, PolyMap(ring, elem));
    int worst = 0;
    for (const Polynomial& img : candidate.images()) worst = std::max(worst, img.total_degree());
    if (worst > image_degree_cap) continue;
    phi = candidate;
    ++made;
  }
  return phi;
}

}  // namespace keller
