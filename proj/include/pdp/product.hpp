#ifndef PDP_PRODUCT_HPP
#define PDP_PRODUCT_HPP

#include "pdp/behaviour.hpp"
#include "pdp/polytopes.hpp"
#include "pdp/scenario.hpp"

#include <optional>

namespace pdp {

/// Behaviour product over the bipartition of s defined by coll:
/// wp(a|x) = p(a_F|x_F) q(a_{I\F}|x_{I\F}).  Redundant bipartitions reduce to
/// the identity on the present factor.  A signalling factor is accepted only
/// when the bipartition splits whole parties; otherwise the product is
/// ill-defined in mixed contexts and throws.
Behaviour behaviour_product(const std::shared_ptr<const Scenario>& s, const InputCollection& coll,
                            const std::optional<Behaviour>& p, const std::optional<Behaviour>& q);

/// Pairwise products of two vertex sets living on the two sides of the
/// bipartition, deduplicated.
VertexSet set_product(const std::shared_ptr<const Scenario>& s, const InputCollection& coll,
                      const VertexSet& left, const VertexSet& right,
                      const PolytopeBudget& budget = {});

/// Checks R_{|V}(p (x) q) = R_{|M' cap V}(p) (x) R_{|M'perp cap V}(q) for every
/// pair drawn from the two sets.
bool restriction_distributivity_check(const std::shared_ptr<const Scenario>& s,
                                      const InputCollection& coll, const VertexSet& left,
                                      const VertexSet& right, const InputCollection& v);

}  // namespace pdp

#endif
