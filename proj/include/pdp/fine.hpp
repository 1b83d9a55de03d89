#ifndef PDP_FINE_HPP
#define PDP_FINE_HPP

#include "pdp/behaviour.hpp"
#include "pdp/exactgeom.hpp"
#include "pdp/polytopes.hpp"
#include "pdp/scenario.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace pdp {

/// A family of joint distributions, one per context of S_{|M'perp}, over
/// (alpha, beta): alpha ranges over all potential outcomes of all inputs in
/// M' (axes ordered by party, then input, last axis fastest), beta over the
/// outcome tuples of the S_{|M'perp} context.  When M' = M the beta block is
/// degenerate (a single empty context) and the single table is the classical
/// Fine joint over alpha.
struct JointDistribution {
    std::shared_ptr<const Scenario> scenario;  // the parent S
    InputCollection coll;                      // M'
    std::vector<std::size_t> alpha_radices;    // |O_{i,x}| per deterministic axis
    std::size_t alpha_count = 1;
    std::vector<std::vector<Rat>> tables;      // per beta context, alpha-major

    std::size_t beta_context_count() const { return tables.size(); }
};

/// Fine's product construction for a no-signalling behaviour in a scenario
/// with at most one multi-input party.  P(alpha) = 0 wherever the shared
/// marginal vanishes.
JointDistribution fine_joint_one_multi_party(const Behaviour& wp);

/// One term t_rk D_r (x) P_k of a partially deterministic model.  A factor is
/// absent when its side of the bipartition is empty.
struct PartialModelTerm {
    Rat weight;
    std::optional<Behaviour> deterministic;  // D_r on S_{|M'}
    std::optional<Behaviour> ns_part;        // P_k on S_{|M'perp}
};

struct PartialModel {
    std::shared_ptr<const Scenario> scenario;
    InputCollection coll;
    std::vector<PartialModelTerm> terms;
};

/// Turns an Inside certificate over pd_vertices(S,M') into the explicit model
/// (t_rk, D_r, P_k), and re-evaluates it against wp exactly.
PartialModel model_from_certificate(const Behaviour& wp, const MembershipCertificate& cert,
                                    const VertexSet& pd_set);

JointDistribution partial_joint_from_model(const PartialModel& model);

/// Exact verification: the family is no-signalling as a behaviour (alpha held
/// by an auxiliary single-input party) and recovers every distribution of wp
/// by marginalization, for every consistent beta context.
bool verify_joint(const JointDistribution& joint, const Behaviour& wp);

}  // namespace pdp

#endif
