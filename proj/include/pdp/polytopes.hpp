#ifndef PDP_POLYTOPES_HPP
#define PDP_POLYTOPES_HPP

#include "pdp/behaviour.hpp"
#include "pdp/exactgeom.hpp"
#include "pdp/scenario.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pdp {

enum class Family { E, Bell, NS, PD, Composed };

std::string family_name(Family f);

/// A finite generating set of behaviours, canonically sorted and deduplicated.
struct VertexSet {
    std::shared_ptr<const Scenario> scenario;
    Family family = Family::Composed;
    std::optional<InputCollection> collection;  // the M' of a PD set
    std::vector<Behaviour> vertices;

    VRep vrep() const;
    bool contains(const Behaviour& b) const;  // exact set membership (not hull)
};

struct PolytopeBudget {
    std::size_t max_vertices = 2'000'000;
    EnumerationBudget enumeration{};
};

/// Canonical H-representation of NS(S): positivity inequalities plus
/// normalization and no-signalling equalities.
HRep ns_hrep(const Scenario& s);

/// Ext(E(S)): all predictable behaviours (one outcome per context).
VertexSet e_vertices(std::shared_ptr<const Scenario> s, const PolytopeBudget& budget = {});

/// Ext(B(S)): local deterministic products (one outcome per party input).
VertexSet bell_vertices(std::shared_ptr<const Scenario> s, const PolytopeBudget& budget = {});

/// Ext(NS(S)).  Single-input parties are split off as deterministic factors;
/// the solid remainder is enumerated exactly from the H-representation.
VertexSet ns_vertices(std::shared_ptr<const Scenario> s, const PolytopeBudget& budget = {});

/// Ext(PD(S,M')) = Ext(B(S_{|M'})) x Ext(NS(S_{|M'perp})) under the behaviour
/// product; the redundant collections reproduce Bell and NS.
VertexSet pd_vertices(std::shared_ptr<const Scenario> s, const InputCollection& coll,
                      const PolytopeBudget& budget = {});

/// Convex-hull membership with an exact certificate.  An Inside certificate
/// doubles as a (partially deterministic) model: weights over the vertices.
MembershipCertificate membership(const Behaviour& wp, const VertexSet& set);

/// Sort + dedup in place (canonical representation).
void canonicalize(VertexSet& set);

/// Union of vertex sets over the same scenario, deduplicated, tagged Composed.
VertexSet merge(const std::vector<const VertexSet*>& sets);

}  // namespace pdp

#endif
