#include "keller/report.hpp"

#include "keller/parse.hpp"

namespace keller {

std::string condition_status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds: return "holds";
    case ConditionStatus::Fails: return "fails";
    case ConditionStatus::UnknownUpToBound: return "unknown-up-to-bound";
  }
  return "?";
}

Json ring_to_json(const PolyRing& ring) {
  Json j;
  j["variables"] = ring.variables();
  switch (ring.order().kind) {
    case OrderKind::GradedLex: j["order"] = "grlex"; break;
    case OrderKind::Lex: j["order"] = "lex"; break;
    case OrderKind::Block:
      j["order"] = "block";
      j["block_split"] = ring.order().block_split;
      break;
  }
  return j;
}

Json to_json(const Polynomial& p) { return to_string(p); }

Json to_json(const SquareFreeDecomposition& d) {
  Json parts = Json::array();
  for (const auto& part : d.parts) {
    parts.push_back({{"factor", to_json(part.factor)}, {"multiplicity", part.multiplicity}});
  }
  return Json{{"unit", d.unit.str()}, {"parts", parts}};
}

Json to_json(const Factorization& f) {
  Json parts = Json::array();
  for (const auto& part : f.factors) {
    parts.push_back({{"factor", to_json(part.factor)}, {"multiplicity", part.multiplicity}});
  }
  return Json{{"unit", f.unit.str()}, {"factors", parts}};
}

Json to_json(const JacobianMinors& m) {
  Json out = Json::array();
  for (const auto& [subset, det] : m.minors) {
    Json cols = Json::array();
    for (int v : subset) cols.push_back(v + 1);
    out.push_back({{"columns", cols}, {"determinant", to_json(det)}});
  }
  return out;
}

Json to_json(const DgcdResult& d) {
  return Json{{"value", to_json(d.value)}, {"is_constant_nonzero", d.is_constant_nonzero}};
}

Json to_json(const MembershipResult& m) {
  Json j;
  j["verdict"] = m.member ? "member" : "non-member";
  if (m.representation) j["representation"] = to_json(*m.representation);
  if (m.normal_form) j["normal_form"] = to_json(*m.normal_form);
  return j;
}

Json to_json(const WitnessResult& w) {
  Json j;
  j["outcome"] = w.outcome == SearchOutcome::Found ? "found" : "none-up-to-bound";
  j["kind"] = w.kind == WitnessKind::Irreducible ? "irreducible" : "square-free";
  j["degree_searched"] = w.degree_searched;
  if (w.outcome == SearchOutcome::Found) {
    j["witness"] = to_json(*w.witness);
    j["found_degree"] = w.found_degree;
    j["certificate"] = to_json(*w.certificate);
  }
  j["nullspace_dims"] = w.nullspace_dims;
  return j;
}

Json to_json(const Certificate& c) {
  Json items;
  for (const auto& item : c.items) items[item.name] = to_json(item.value);
  return Json{{"description", c.description}, {"items", items}};
}

Json to_json(const EquivalenceVerdict& v) {
  Json conditions;
  for (const auto& [name, status] : v.conditions) {
    conditions[name] = condition_status_name(status);
  }
  Json j;
  j["conditions"] = conditions;
  j["consistent_with_theorem"] = v.consistent_with_theorem;
  if (!v.violations.empty()) {
    Json arr = Json::array();
    for (const auto& c : v.violations) arr.push_back(to_json(c));
    j["violations"] = arr;
  }
  if (!v.exhibits.empty()) {
    Json arr = Json::array();
    for (const auto& c : v.exhibits) arr.push_back(to_json(c));
    j["exhibits"] = arr;
  }
  if (!v.assumed_hypotheses.empty()) j["assumed_hypotheses"] = v.assumed_hypotheses;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

Json to_json(const FalsifierReport& r) {
  Json j;
  j["samples_tried"] = r.samples_tried;
  Json arr = Json::array();
  for (const auto& c : r.counterexamples) arr.push_back(to_json(c));
  j["counterexamples"] = arr;
  Json bounds;
  for (const auto& [name, value] : r.exhausted_bounds) bounds[name] = value;
  j["exhausted_bounds"] = bounds;
  if (!r.assumed_hypotheses.empty()) j["assumed_hypotheses"] = r.assumed_hypotheses;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json make_report(const std::string& theorem, Json inputs, Json verdict, Json certificates,
                 Json bounds, uint64_t seed) {
  Json j;
  j["theorem"] = theorem;
  j["inputs"] = std::move(inputs);
  j["verdict"] = std::move(verdict);
  j["certificates"] = std::move(certificates);
  j["bounds"] = std::move(bounds);
  j["seed"] = seed;
  return j;
}

}  // namespace keller
