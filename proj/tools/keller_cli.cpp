#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "keller/factor.hpp"
#include "keller/harness.hpp"
#include "keller/jacobian.hpp"
#include "keller/parse.hpp"
#include "keller/report.hpp"

namespace {

using namespace keller;

constexpr int kExitTrue = 0;        // consistent / true / member / found
constexpr int kExitFalse = 1;       // counterexample / false / non-member
constexpr int kExitUsage = 2;       // usage or parse error
constexpr int kExitUnknown = 3;     // unknown-up-to-bound

struct CommonOpts {
  std::vector<std::string> vars;
  std::string order = "grlex";
  std::string format = "human";
  uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->set_help_flag("--help", "print help");
  cmd->add_option("--vars", o.vars, "ring variables, comma separated")
      ->required()
      ->delimiter(',');
  cmd->add_option("--order", o.order, "monomial order")
      ->check(CLI::IsMember({"grlex", "lex"}));
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "json"}));
  cmd->add_option("--seed", o.seed, "seed for randomized harnesses");
}

RingPtr make_ring(const CommonOpts& o) {
  MonomialOrder order;
  order.kind = o.order == "lex" ? OrderKind::Lex : OrderKind::GradedLex;
  return PolyRing::create(o.vars, order);
}

PolyMap parse_map(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Polynomial> images;
  images.reserve(texts.size());
  for (const auto& t : texts) images.push_back(parse_polynomial(t, ring));
  return PolyMap(ring, images);
}

std::vector<Polynomial> parse_polys(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

Json inputs_json(const CommonOpts& o, const RingPtr& ring) {
  Json j;
  j["ring"] = ring_to_json(*ring);
  return j;
}

void emit(const CommonOpts& o, const Json& report, const std::string& human) {
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

int exit_for_verdict(const EquivalenceVerdict& v) {
  if (!v.consistent_with_theorem) return kExitFalse;
  for (const auto& [name, status] : v.conditions) {
    if (status == ConditionStatus::UnknownUpToBound) return kExitUnknown;
  }
  return kExitTrue;
}

std::string human_verdict(const EquivalenceVerdict& v) {
  std::string s;
  for (const auto& [name, status] : v.conditions) {
    s += "condition (" + name + "): " + condition_status_name(status) + "\n";
  }
  s += std::string("consistent with the theorem: ") +
       (v.consistent_with_theorem ? "yes" : "NO") + "\n";
  for (const auto& c : v.exhibits) {
    s += "exhibit: " + c.description + "\n";
    for (const auto& item : c.items) s += "  " + item.name + " = " + to_string(item.value) + "\n";
  }
  for (const auto& c : v.violations) {
    s += "VIOLATION: " + c.description + "\n";
    for (const auto& item : c.items) s += "  " + item.name + " = " + to_string(item.value) + "\n";
  }
  for (const auto& n : v.notes) s += "note: " + n + "\n";
  for (const auto& h : v.assumed_hypotheses) s += "assumed: " + h + "\n";
  return s;
}

std::string human_falsifier(const FalsifierReport& r) {
  std::string s = "samples tried: " + std::to_string(r.samples_tried) + "\n";
  if (r.counterexamples.empty()) {
    s += "no counterexamples found\n";
  }
  for (const auto& c : r.counterexamples) {
    s += "counterexample: " + c.description + "\n";
    for (const auto& item : c.items) s += "  " + item.name + " = " + to_string(item.value) + "\n";
  }
  for (const auto& n : r.notes) s += "note: " + n + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"keller - exact verification of Jacobian conditions via square-free and "
               "irreducible polynomials"};
  app.require_subcommand(1);

  // ---- jac ----
  CommonOpts jac_o;
  std::vector<std::string> jac_maps;
  auto* jac_cmd = app.add_subcommand("jac", "Jacobian matrix and its maximal minors");
  add_common(jac_cmd, jac_o);
  jac_cmd->add_option("--map", jac_maps, "image polynomial (repeat per component)")->required();

  // ---- dgcd ----
  CommonOpts dgcd_o;
  std::vector<std::string> dgcd_maps;
  auto* dgcd_cmd = app.add_subcommand("dgcd", "differential gcd of the Jacobian minors");
  add_common(dgcd_cmd, dgcd_o);
  dgcd_cmd->add_option("--map", dgcd_maps)->required();

  // ---- sqfree ----
  CommonOpts sqf_o;
  std::string sqf_poly;
  auto* sqf_cmd = app.add_subcommand("sqfree", "square-freeness test and decomposition");
  add_common(sqf_cmd, sqf_o);
  sqf_cmd->add_option("--poly", sqf_poly)->required();

  // ---- irreducible ----
  CommonOpts irr_o;
  std::string irr_poly;
  auto* irr_cmd = app.add_subcommand("irreducible", "irreducibility test over Q");
  add_common(irr_cmd, irr_o);
  irr_cmd->add_option("--poly", irr_poly)->required();

  // ---- gcd ----
  CommonOpts gcd_o;
  std::string gcd_p, gcd_q;
  auto* gcd_cmd = app.add_subcommand("gcd", "normalized multivariate gcd");
  add_common(gcd_cmd, gcd_o);
  gcd_cmd->add_option("--p", gcd_p)->required();
  gcd_cmd->add_option("--q", gcd_q)->required();

  // ---- factor ----
  CommonOpts fac_o;
  std::string fac_poly;
  auto* fac_cmd = app.add_subcommand("factor", "factorization into rational irreducibles");
  add_common(fac_cmd, fac_o);
  fac_cmd->add_option("--poly", fac_poly)->required();

  // ---- keller ----
  CommonOpts kel_o;
  std::vector<std::string> kel_maps;
  auto* kel_cmd = app.add_subcommand("keller", "Jacobian condition for an endomorphism");
  add_common(kel_cmd, kel_o);
  kel_cmd->add_option("--map", kel_maps)->required();

  // ---- witness ----
  CommonOpts wit_o;
  std::vector<std::string> wit_maps;
  std::string wit_g;
  int wit_maxdeg = 8;
  int wit_comb = 2;
  std::string wit_kind = "irreducible";
  auto* wit_cmd = app.add_subcommand("witness", "search for w with g^2 | w(f_1..f_r)");
  add_common(wit_cmd, wit_o);
  wit_cmd->add_option("--map", wit_maps)->required();
  wit_cmd->add_option("--g", wit_g)->required();
  wit_cmd->add_option("--max-degree", wit_maxdeg);
  wit_cmd->add_option("--comb-bound", wit_comb);
  wit_cmd->add_option("--kind", wit_kind)->check(CLI::IsMember({"irreducible", "squarefree"}));

  // ---- thm24 ----
  CommonOpts t24_o;
  std::vector<std::string> t24_maps;
  std::string t24_g;
  int t24_maxdeg = 8;
  auto* t24_cmd = app.add_subcommand(
      "thm24", "minor divisibility against bounded witness searches");
  add_common(t24_cmd, t24_o);
  t24_cmd->add_option("--map", t24_maps)->required();
  t24_cmd->add_option("--g", t24_g)->required();
  t24_cmd->add_option("--max-degree", t24_maxdeg);

  // ---- thm31 ----
  CommonOpts t31_o;
  std::vector<std::string> t31_maps;
  std::vector<std::string> t31_samples;
  int t31_nsamples = 20;
  int t31_sample_degree = 2;
  int t31_maxdeg = 4;
  auto* t31_cmd = app.add_subcommand(
      "thm31", "square-freeness preservation under an endomorphism");
  add_common(t31_cmd, t31_o);
  t31_cmd->add_option("--map", t31_maps)->required();
  t31_cmd->add_option("--sample", t31_samples, "sample polynomial w (repeatable)");
  t31_cmd->add_option("--samples", t31_nsamples, "number of generated samples");
  t31_cmd->add_option("--sample-degree", t31_sample_degree);
  t31_cmd->add_option("--max-degree", t31_maxdeg);

  // ---- membership ----
  CommonOpts mem_o;
  std::vector<std::string> mem_gens;
  std::string mem_h;
  auto* mem_cmd = app.add_subcommand("membership", "subalgebra membership with representation");
  add_common(mem_cmd, mem_o);
  mem_cmd->add_option("--gen", mem_gens, "subalgebra generator (repeatable)")->required();
  mem_cmd->add_option("--h", mem_h)->required();

  // ---- jc-falsify ----
  CommonOpts jcf_o;
  std::vector<std::string> jcf_maps;
  int jcf_degree = 3;
  auto* jcf_cmd = app.add_subcommand(
      "jc-falsify", "bounded falsifier for algebraic closedness of the image algebra");
  add_common(jcf_cmd, jcf_o);
  jcf_cmd->add_option("--map", jcf_maps)->required();
  jcf_cmd->add_option("--search-degree", jcf_degree);

  // ---- sqf-closed ----
  CommonOpts sfc_o;
  std::vector<std::string> sfc_gens;
  std::vector<std::string> sfc_samples;
  auto* sfc_cmd = app.add_subcommand(
      "sqf-closed", "square-factorial closedness falsifier over sample elements");
  add_common(sfc_cmd, sfc_o);
  sfc_cmd->add_option("--gen", sfc_gens)->required();
  sfc_cmd->add_option("--sample", sfc_samples,
                      "sample w in the generator variables (T or y1..yr)");

  // ---- root-closed ----
  CommonOpts rtc_o;
  std::vector<std::string> rtc_gens;
  int rtc_degree = 2;
  int rtc_power = 4;
  auto* rtc_cmd = app.add_subcommand("root-closed", "root closedness falsifier");
  add_common(rtc_cmd, rtc_o);
  rtc_cmd->add_option("--gen", rtc_gens)->required();
  rtc_cmd->add_option("--candidate-degree", rtc_degree);
  rtc_cmd->add_option("--max-power", rtc_power);

  // ---- thm62 ----
  CommonOpts t62_o;
  std::vector<std::string> t62_gens;
  int t62_degree = 2;
  int t62_power = 4;
  auto* t62_cmd = app.add_subcommand(
      "thm62", "paired root-closedness / square-factorial-closedness falsifiers");
  add_common(t62_cmd, t62_o);
  t62_cmd->add_option("--gen", t62_gens)->required();
  t62_cmd->add_option("--candidate-degree", t62_degree);
  t62_cmd->add_option("--max-power", t62_power);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*jac_cmd) {
      RingPtr ring = make_ring(jac_o);
      PolyMap f = parse_map(jac_maps, ring);
      auto matrix = jacobian_matrix(f);
      JacobianMinors minors = jacobian_minors(f);
      Json inputs = inputs_json(jac_o, ring);
      inputs["map"] = jac_maps;
      Json verdict;
      Json rows = Json::array();
      for (const auto& row : matrix) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        rows.push_back(r);
      }
      verdict["matrix"] = rows;
      verdict["minors"] = to_json(minors);
      std::string human = "jacobian matrix:\n";
      for (const auto& row : matrix) {
        human += "  [";
        for (std::size_t j = 0; j < row.size(); ++j) {
          human += (j ? ", " : " ") + to_string(row[j]);
        }
        human += " ]\n";
      }
      human += "minors:\n";
      for (const auto& [subset, det] : minors.minors) {
        human += "  {";
        for (std::size_t j = 0; j < subset.size(); ++j) {
          human += (j ? "," : "") + std::to_string(subset[j] + 1);
        }
        human += "}: " + to_string(det) + "\n";
      }
      emit(jac_o, make_report("jacobian", inputs, verdict, Json::array(), Json::object(),
                              jac_o.seed),
           human);
      return kExitTrue;
    }

    if (*dgcd_cmd) {
      RingPtr ring = make_ring(dgcd_o);
      PolyMap f = parse_map(dgcd_maps, ring);
      DgcdResult d = dgcd(f);
      Json inputs = inputs_json(dgcd_o, ring);
      inputs["map"] = dgcd_maps;
      emit(dgcd_o,
           make_report("dgcd", inputs, to_json(d), Json::array(), Json::object(), dgcd_o.seed),
           "dgcd = " + to_string(d.value) +
               (d.is_constant_nonzero ? " (nonzero constant)\n" : " (not constant)\n"));
      return d.is_constant_nonzero ? kExitTrue : kExitFalse;
    }

    if (*sqf_cmd) {
      RingPtr ring = make_ring(sqf_o);
      Polynomial p = parse_polynomial(sqf_poly, ring);
      bool sqf = is_squarefree(p);
      SquareFreeDecomposition dec = squarefree_decompose(p);
      Json inputs = inputs_json(sqf_o, ring);
      inputs["poly"] = sqf_poly;
      Json verdict;
      verdict["square_free"] = sqf;
      verdict["decomposition"] = to_json(dec);
      std::string human = std::string("square-free: ") + (sqf ? "yes" : "no") + "\n";
      for (const auto& part : dec.parts) {
        human += "  (" + to_string(part.factor) + ")^" + std::to_string(part.multiplicity) + "\n";
      }
      emit(sqf_o, make_report("squarefree", inputs, verdict, Json::array(), Json::object(),
                              sqf_o.seed),
           human);
      return sqf ? kExitTrue : kExitFalse;
    }

    if (*irr_cmd) {
      RingPtr ring = make_ring(irr_o);
      Polynomial p = parse_polynomial(irr_poly, ring);
      bool irr = is_irreducible(p);
      Json inputs = inputs_json(irr_o, ring);
      inputs["poly"] = irr_poly;
      emit(irr_o, make_report("irreducible", inputs, Json{{"irreducible", irr}}, Json::array(),
                              Json::object(), irr_o.seed),
           std::string("irreducible: ") + (irr ? "yes" : "no") + "\n");
      return irr ? kExitTrue : kExitFalse;
    }

    if (*gcd_cmd) {
      RingPtr ring = make_ring(gcd_o);
      Polynomial a = parse_polynomial(gcd_p, ring);
      Polynomial b = parse_polynomial(gcd_q, ring);
      Polynomial g = gcd(a, b);
      Json inputs = inputs_json(gcd_o, ring);
      inputs["p"] = gcd_p;
      inputs["q"] = gcd_q;
      emit(gcd_o, make_report("gcd", inputs, Json{{"gcd", to_json(g)}}, Json::array(),
                              Json::object(), gcd_o.seed),
           "gcd = " + to_string(g) + "\n");
      return kExitTrue;
    }

    if (*fac_cmd) {
      RingPtr ring = make_ring(fac_o);
      Polynomial p = parse_polynomial(fac_poly, ring);
      Factorization f = factor(p);
      Json inputs = inputs_json(fac_o, ring);
      inputs["poly"] = fac_poly;
      std::string human = "unit: " + f.unit.str() + "\n";
      for (const auto& part : f.factors) {
        human += "  (" + to_string(part.factor) + ")^" + std::to_string(part.multiplicity) + "\n";
      }
      emit(fac_o, make_report("factor", inputs, to_json(f), Json::array(), Json::object(),
                              fac_o.seed),
           human);
      return kExitTrue;
    }

    if (*kel_cmd) {
      RingPtr ring = make_ring(kel_o);
      PolyMap f = parse_map(kel_maps, ring);
      Polynomial det = poly_determinant(jacobian_matrix(f), ring);
      bool keller = is_keller(f);
      Json inputs = inputs_json(kel_o, ring);
      inputs["map"] = kel_maps;
      Json verdict;
      verdict["keller"] = keller;
      verdict["jacobian_determinant"] = to_json(det);
      emit(kel_o, make_report("keller", inputs, verdict, Json::array(), Json::object(),
                              kel_o.seed),
           "jac = " + to_string(det) + "\nkeller: " + (keller ? "yes" : "no") + "\n");
      return keller ? kExitTrue : kExitFalse;
    }

    if (*wit_cmd) {
      RingPtr ring = make_ring(wit_o);
      PolyMap f = parse_map(wit_maps, ring);
      Polynomial g = parse_polynomial(wit_g, ring);
      WitnessOptions opts;
      opts.comb_bound = wit_comb;
      WitnessKind kind =
          wit_kind == "squarefree" ? WitnessKind::SquareFree : WitnessKind::Irreducible;
      WitnessResult w = witness_search(f, g, wit_maxdeg, kind, opts);
      Json inputs = inputs_json(wit_o, ring);
      inputs["map"] = wit_maps;
      inputs["g"] = wit_g;
      inputs["kind"] = wit_kind;
      Json bounds;
      bounds["max_degree"] = wit_maxdeg;
      bounds["comb_bound"] = wit_comb;
      std::string human;
      if (w.outcome == SearchOutcome::Found) {
        human = "witness: " + to_string(*w.witness) + "\ncertificate quotient: " +
                to_string(*w.certificate) + "\n";
      } else {
        human = "no witness up to degree " + std::to_string(w.degree_searched) + "\n";
      }
      emit(wit_o, make_report("witness", inputs, to_json(w), Json::array(), bounds, wit_o.seed),
           human);
      return w.outcome == SearchOutcome::Found ? kExitTrue : kExitUnknown;
    }

    if (*t24_cmd) {
      RingPtr ring = make_ring(t24_o);
      PolyMap f = parse_map(t24_maps, ring);
      Polynomial g = parse_polynomial(t24_g, ring);
      EquivalenceVerdict v = check_thm24(f, g, t24_maxdeg);
      Json inputs = inputs_json(t24_o, ring);
      inputs["map"] = t24_maps;
      inputs["g"] = t24_g;
      emit(t24_o, make_report("thm24", inputs, to_json(v), Json::array(),
                              Json{{"max_degree", t24_maxdeg}}, t24_o.seed),
           human_verdict(v));
      return exit_for_verdict(v);
    }

    if (*t31_cmd) {
      RingPtr ring = make_ring(t31_o);
      PolyMap phi = parse_map(t31_maps, ring);
      std::vector<Polynomial> samples = parse_polys(t31_samples, ring);
      if (samples.empty()) {
        Rng rng(t31_o.seed);
        while (static_cast<int>(samples.size()) < t31_nsamples) {
          Polynomial w = random_polynomial(ring, t31_sample_degree, 3, 3, rng);
          if (w.is_zero() || w.is_constant()) continue;
          if (!is_squarefree(w)) continue;
          samples.push_back(w);
        }
      }
      EquivalenceVerdict v = check_keller_preservation(phi, samples, t31_maxdeg);
      Json inputs = inputs_json(t31_o, ring);
      inputs["map"] = t31_maps;
      Json sample_texts = Json::array();
      for (const auto& w : samples) sample_texts.push_back(to_string(w));
      inputs["samples"] = sample_texts;
      emit(t31_o, make_report("thm31", inputs, to_json(v), Json::array(),
                              Json{{"max_degree", t31_maxdeg}}, t31_o.seed),
           human_verdict(v));
      return exit_for_verdict(v);
    }

    if (*mem_cmd) {
      RingPtr ring = make_ring(mem_o);
      std::vector<Polynomial> gens = parse_polys(mem_gens, ring);
      Polynomial h = parse_polynomial(mem_h, ring);
      MembershipResult m = subalgebra_membership(h, gens);
      Json inputs = inputs_json(mem_o, ring);
      inputs["generators"] = mem_gens;
      inputs["h"] = mem_h;
      std::string human = m.member ? "member" : "non-member";
      if (m.representation) human += ", representation: " + to_string(*m.representation);
      human += "\n";
      emit(mem_o, make_report("membership", inputs, to_json(m), Json::array(), Json::object(),
                              mem_o.seed),
           human);
      return m.member ? kExitTrue : kExitFalse;
    }

    if (*jcf_cmd) {
      RingPtr ring = make_ring(jcf_o);
      PolyMap f = parse_map(jcf_maps, ring);
      FalsifierReport r = jc_falsifier(f, jcf_degree);
      Json inputs = inputs_json(jcf_o, ring);
      inputs["map"] = jcf_maps;
      emit(jcf_o, make_report("jc-falsify", inputs, to_json(r), Json::array(),
                              Json{{"search_degree", jcf_degree}}, jcf_o.seed),
           human_falsifier(r));
      return r.counterexamples.empty() ? kExitTrue : kExitFalse;
    }

    if (*sfc_cmd) {
      RingPtr ring = make_ring(sfc_o);
      std::vector<Polynomial> gens = parse_polys(sfc_gens, ring);
      RingPtr source = witness_ring(static_cast<int>(gens.size()));
      std::vector<Polynomial> samples = parse_polys(sfc_samples, source);
      FalsifierReport r = sqf_closed_check(gens, samples);
      Json inputs = inputs_json(sfc_o, ring);
      inputs["generators"] = sfc_gens;
      inputs["samples"] = sfc_samples;
      emit(sfc_o, make_report("sqf-closed", inputs, to_json(r), Json::array(), Json::object(),
                              sfc_o.seed),
           human_falsifier(r));
      return r.counterexamples.empty() ? kExitTrue : kExitFalse;
    }

    if (*rtc_cmd) {
      RingPtr ring = make_ring(rtc_o);
      std::vector<Polynomial> gens = parse_polys(rtc_gens, ring);
      FalsifierReport r = root_closed_check(gens, rtc_degree, rtc_power);
      Json inputs = inputs_json(rtc_o, ring);
      inputs["generators"] = rtc_gens;
      Json bounds;
      bounds["candidate_degree"] = rtc_degree;
      bounds["max_power"] = rtc_power;
      emit(rtc_o, make_report("root-closed", inputs, to_json(r), Json::array(), bounds,
                              rtc_o.seed),
           human_falsifier(r));
      return r.counterexamples.empty() ? kExitTrue : kExitFalse;
    }

    if (*t62_cmd) {
      RingPtr ring = make_ring(t62_o);
      std::vector<Polynomial> gens = parse_polys(t62_gens, ring);
      Thm62Options opts;
      opts.candidate_degree = t62_degree;
      opts.max_power = t62_power;
      Thm62Result r = check_thm62_pairing(gens, opts);
      Json inputs = inputs_json(t62_o, ring);
      inputs["generators"] = t62_gens;
      Json verdict = to_json(r.verdict);
      verdict["root_report"] = to_json(r.root_report);
      verdict["sqf_report"] = to_json(r.sqf_report);
      Json bounds;
      bounds["candidate_degree"] = t62_degree;
      bounds["max_power"] = t62_power;
      std::string human = human_verdict(r.verdict) + "-- root-closedness --\n" +
                          human_falsifier(r.root_report) + "-- square-factorial closedness --\n" +
                          human_falsifier(r.sqf_report);
      emit(t62_o, make_report("thm62", inputs, verdict, Json::array(), bounds, t62_o.seed),
           human);
      if (!r.verdict.consistent_with_theorem) return kExitFalse;
      return exit_for_verdict(r.verdict);
    }
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const keller::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
