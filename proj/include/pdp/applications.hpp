#ifndef PDP_APPLICATIONS_HPP
#define PDP_APPLICATIONS_HPP

#include "pdp/behaviour.hpp"
#include "pdp/classify.hpp"
#include "pdp/exactgeom.hpp"
#include "pdp/polytopes.hpp"
#include "pdp/scenario.hpp"

#include <memory>
#include <string>
#include <vector>

namespace pdp {

/// Local relabeling: per party a permutation of inputs and, per original
/// input, a permutation of its outputs.  input_map[i][x] is the new position
/// of input x; output_map[i][x][a] the new position of outcome a under x.
struct Relabeling {
    std::vector<std::vector<std::size_t>> input_map;
    std::vector<std::vector<std::vector<std::size_t>>> output_map;

    static Relabeling identity(const Scenario& s);
};

Behaviour apply_relabeling(const Behaviour& wp, const Relabeling& rel);
AffineFunctional relabel_functional(const Scenario& s, const AffineFunctional& f, const Relabeling& rel);

/// All behaviours obtainable from wp by local relabelings, deduplicated.
std::vector<Behaviour> relabeling_orbit(const Behaviour& wp);

struct Inequality {
    AffineFunctional functional;  // functional . r <= bound
    std::string tag;
};

enum class InequalityFamily { CH, CHSH, Sliwa3A, Sliwa3B, Sliwa3C };

/// Exact functional in probability coordinates (correlators expanded with the
/// first output of every input mapped to +1).  CH marginals are expanded in
/// the first context.
Inequality build_inequality(const std::shared_ptr<const Scenario>& s, InequalityFamily family,
                            const Relabeling& rel);
Inequality build_inequality(const std::shared_ptr<const Scenario>& s, InequalityFamily family);

Rat evaluate(const Inequality& iq, const Behaviour& wp);

/// The PR box on a 2-party 2-input 2-output scenario (algebraic CHSH maximum).
Behaviour pr_box(const std::shared_ptr<const Scenario>& s, const Relabeling& rel);
Behaviour pr_box(const std::shared_ptr<const Scenario>& s);
/// Partial PR box on a tripartite binary scenario: party k deterministic
/// (both correlators +1), PR box between the remaining pair.
Behaviour partial_pr_box(const std::shared_ptr<const Scenario>& s, std::size_t party);

struct InseparabilityEntry {
    std::vector<std::size_t> subset;  // I'
    bool inside = false;
    MembershipCertificate certificate;
};

/// Membership of wp in each PD(S, M^{I'}), their intersection, union, and the
/// convex hull of the union, mapped onto the witness ladder.  The report is
/// about behaviour sets only; a quantum state weakly separable w.r.t. the
/// collection always produces a behaviour inside the hull, so each "outside"
/// verdict witnesses the corresponding inseparability.
struct InseparabilityReport {
    std::vector<InseparabilityEntry> entries;
    bool inside_intersection = false;
    bool inside_union = false;
    bool inside_hull = false;
    MembershipCertificate hull_certificate;

    bool subset_inseparable(std::size_t k) const { return !entries[k].inside; }
    bool weakly_inseparable() const { return !inside_intersection; }
    bool collection_inseparable() const { return !inside_union; }
    bool strongly_inseparable() const { return !inside_hull; }
};

InseparabilityReport inseparability_report(const Behaviour& wp,
                                           const std::vector<std::vector<std::size_t>>& subsets,
                                           const PolytopeBudget& budget = {});

/// NS2-local generators: union of the three PD(S,M^{i}) vertex sets.
VertexSet ns2_vertices(const std::shared_ptr<const Scenario>& s, const PolytopeBudget& budget = {});
/// Svetlichny generators: union over i of Ext(B(S^{i})) x Ext(E(S^{i perp}))
/// under the whole-party-block product (signalling sub-behaviours allowed).
VertexSet svetlichny_vertices(const std::shared_ptr<const Scenario>& s,
                              const PolytopeBudget& budget = {});

/// Broadcast-local generators.  Without blocks this is PD(S, M^{I_L}); with
/// blocks, the folded product of B(S^{I_L}) with one NS factor per block.
VertexSet broadcast_local_vertices(const std::shared_ptr<const Scenario>& s,
                                   const std::vector<std::size_t>& receivers,
                                   const std::vector<std::vector<std::size_t>>& blocks,
                                   const PolytopeBudget& budget = {});

/// A sequential Wigner's-friend scenario: the base scenario plus, per party,
/// the number of query inputs (the first query_counts[i] inputs of party i).
struct SequentialScenario {
    std::shared_ptr<const Scenario> base;
    std::vector<std::size_t> query_counts;

    void validate() const;
};

/// The Local Friendliness set of the sequential scenario is PD(S, M^Z).
std::pair<std::shared_ptr<const Scenario>, InputCollection> sequential_to_pd(
    const SequentialScenario& sw);

}  // namespace pdp

#endif
