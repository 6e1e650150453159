#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "keller/groebner.hpp"
#include "keller/jacobian.hpp"
#include "keller/poly.hpp"

namespace keller {

// Fixed engine so seeded runs are reproducible across platforms.
using Rng = std::mt19937_64;

enum class WitnessKind { Irreducible, SquareFree };
enum class SearchOutcome { Found, NoneUpToBound };

struct WitnessOptions {
  int comb_bound = 2;         // integer combinations with coefficients in [-C, C]
  int max_combo_vectors = 5;  // nullspace vectors combined at once
};

// Result of searching for w with g^2 | w(f_1,...,f_r). Found witnesses come
// with the exact quotient certificate; exhaustion reports the searched
// bound plus the solution-space dimension seen at each degree.
struct WitnessResult {
  SearchOutcome outcome = SearchOutcome::NoneUpToBound;
  WitnessKind kind = WitnessKind::Irreducible;
  int degree_searched = 0;
  int found_degree = 0;
  std::optional<Polynomial> witness;      // in the r-variable witness ring
  std::optional<Polynomial> certificate;  // w(f) / g^2
  std::vector<int> nullspace_dims;        // per degree 1..degree_searched
};

// For each degree, the divisibility condition is linear in the unknown
// coefficients of a generic w; the exact nullspace is scanned (basis
// vectors first, then bounded integer combinations) for an element passing
// the requested kind's test. Sound but bounded: "none up to bound" is not a
// refutation. g must be irreducible, f images nonzero.
WitnessResult witness_search(const PolyMap& f, const Polynomial& g, int max_degree,
                             WitnessKind kind, const WitnessOptions& opts = {});

enum class ConditionStatus { Holds, Fails, UnknownUpToBound };

struct NamedPolynomial {
  std::string name;
  Polynomial value;
};

// A concrete certified payload: either a theorem violation or a
// constructive exhibit (e.g. a square-free w whose image is not).
struct Certificate {
  std::string description;
  std::vector<NamedPolynomial> items;
};

struct EquivalenceVerdict {
  std::vector<std::pair<std::string, ConditionStatus>> conditions;
  bool consistent_with_theorem = true;
  std::vector<Certificate> violations;  // nonempty iff inconsistent
  std::vector<Certificate> exhibits;    // constructive condition failures
  std::vector<std::string> assumed_hypotheses;
  std::vector<std::string> notes;
};

// Divisibility of every maximal minor by g (exact), against the bounded
// witness searches for both kinds.
EquivalenceVerdict check_thm24(const PolyMap& f, const Polynomial& g, int max_degree,
                               const WitnessOptions& opts = {});

// Square-freeness preservation under an endomorphism: checks the sampled
// w's, and constructively exhibits a failing square-free witness when the
// Jacobian determinant is not constant.
EquivalenceVerdict check_keller_preservation(const PolyMap& phi,
                                             const std::vector<Polynomial>& sample_ws,
                                             int max_degree, const WitnessOptions& opts = {});

struct FalsifierReport {
  long samples_tried = 0;
  std::vector<Certificate> counterexamples;
  std::vector<std::pair<std::string, long>> exhausted_bounds;
  std::vector<std::string> assumed_hypotheses;
  std::vector<std::string> notes;
};

// Bounded falsifier for algebraic closedness of k[f_1..f_r]: solves the
// exact linear system for all h of bounded degree whose extended Jacobian
// minors vanish, then tests subalgebra membership of every nonconstant
// basis element. Requires the differential gcd to be a nonzero constant.
FalsifierReport jc_falsifier(const PolyMap& f, int search_degree);

// Square-factorial closedness probe: for sample elements w of the
// subalgebra, enumerates the factorizations w(f) = x^2 y with y square-free
// and reports any part falling outside the subalgebra.
FalsifierReport sqf_closed_check(const std::vector<Polynomial>& generators,
                                 const std::vector<Polynomial>& sample_ws);
FalsifierReport sqf_closed_check(const PolyMap& f, const std::vector<Polynomial>& sample_ws);

struct RootClosedOptions {
  bool pair_combinations = true;  // also try m_i + m_j and m_i - m_j
  int max_candidates = 2000;
};

// Root closedness probe over a structured candidate grid: reports a not in
// R with a^m in R for some 2 <= m <= max_power.
FalsifierReport root_closed_check(const std::vector<Polynomial>& generators,
                                  int candidate_degree, int max_power,
                                  const RootClosedOptions& opts = {});

struct Thm62Options {
  int candidate_degree = 2;
  int max_power = 4;
  RootClosedOptions root_options = {};
};

struct Thm62Result {
  EquivalenceVerdict verdict;
  FalsifierReport root_report;
  FalsifierReport sqf_report;
};

// Contrapositive pairing: a root-closedness counterexample must be matched
// by a square-factorial-closedness counterexample derived from its powers.
// The unit-group and fraction-field hypotheses are recorded as assumed.
Thm62Result check_thm62_pairing(const std::vector<Polynomial>& generators,
                                const Thm62Options& opts = {});

// ---- seeded generators for sampled suites ----

Polynomial random_polynomial(const RingPtr& ring, int max_degree, int max_terms,
                             long coeff_bound, Rng& rng);

// Composition of elementary automorphisms (triangular addends in the other
// variables, transpositions, nonzero scalings); the Jacobian determinant is
// a nonzero constant by construction. Compositions pushing any image degree
// beyond image_degree_cap are rejected and redrawn.
PolyMap random_keller_map(const RingPtr& ring, int composition_count, int addend_degree,
                          int image_degree_cap, Rng& rng);

// All monomials of the ring with total degree <= degree, ascending.
std::vector<Monomial> monomials_up_to(const RingPtr& ring, int degree);

}  // namespace keller
