#pragma once

#include <json.hpp>

#include "keller/factor.hpp"
#include "keller/harness.hpp"
#include "keller/jacobian.hpp"

namespace keller {

// Reports keep insertion order so identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json ring_to_json(const PolyRing& ring);
Json to_json(const Polynomial& p);
Json to_json(const SquareFreeDecomposition& d);
Json to_json(const Factorization& f);
Json to_json(const JacobianMinors& m);
Json to_json(const DgcdResult& d);
Json to_json(const MembershipResult& m);
Json to_json(const WitnessResult& w);
Json to_json(const Certificate& c);
Json to_json(const EquivalenceVerdict& v);
Json to_json(const FalsifierReport& r);

// Standard report envelope shared by the CLI and the harnesses.
Json make_report(const std::string& theorem, Json inputs, Json verdict, Json certificates,
                 Json bounds, uint64_t seed);

std::string condition_status_name(ConditionStatus s);

}  // namespace keller
