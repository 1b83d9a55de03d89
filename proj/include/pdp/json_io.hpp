#ifndef PDP_JSON_IO_HPP
#define PDP_JSON_IO_HPP

#include "pdp/applications.hpp"
#include "pdp/behaviour.hpp"
#include "pdp/classify.hpp"
#include "pdp/exactgeom.hpp"
#include "pdp/fine.hpp"
#include "pdp/polytopes.hpp"
#include "pdp/scenario.hpp"

#include <json.hpp>

#include <memory>
#include <string>

namespace pdp {

using Json = nlohmann::ordered_json;

// Scenarios: {"parties": [...], "inputs": {party: [...]}, "outputs": {party: {input: [...]}}}
Json scenario_to_json(const Scenario& s);
std::shared_ptr<const Scenario> scenario_from_json(const Json& j);

// Input collections: {party: [input, ...]}; omitted parties select nothing.
Json collection_to_json(const Scenario& s, const InputCollection& coll);
InputCollection collection_from_json(const Scenario& s, const Json& j);

// Behaviours: {"table": {"x1:x2": {"a1:a2": "p/q", ...}, ...}} with identifier
// tuples joined by ':'; rationals as reduced "p/q" strings.
Json behaviour_to_json(const Behaviour& wp);
Behaviour behaviour_from_json(std::shared_ptr<const Scenario> s, const Json& j);

Json vertex_set_to_json(const VertexSet& set);
VertexSet vertex_set_from_json(const Json& j);

Json certificate_to_json(const MembershipCertificate& cert);

Json functional_to_json(const AffineFunctional& f);
Json hrep_to_json(const HRep& h);
Json vrep_to_json(const VRep& v);

Json classification_to_json(const Scenario& s, const ClassificationReport& report);

Json inequality_to_json(const Inequality& iq);

Json inseparability_to_json(const Scenario& s, const InseparabilityReport& report);

Json joint_to_json(const JointDistribution& joint);

std::string relation_name(Relation r);

}  // namespace pdp

#endif
