#ifndef PDP_CLASSIFY_HPP
#define PDP_CLASSIFY_HPP

#include "pdp/scenario.hpp"

#include <cstddef>
#include <vector>

namespace pdp {

/// Maximal solid fragment of PD(S,M'): Bottom when the polytope is the Bell
/// polytope, otherwise the collection M'^min that cuts out the largest
/// non-composable no-signalling restriction.
struct MsfDescriptor {
    bool bottom = true;
    InputCollection fragment;  // meaningful iff !bottom

    bool operator==(const MsfDescriptor& o) const {
        return bottom == o.bottom && (bottom || fragment == o.fragment);
    }
    bool operator!=(const MsfDescriptor& o) const { return !(*this == o); }
};

MsfDescriptor msf(const Scenario& s, const InputCollection& coll);

enum class Relation { Equal, Subset, Superset, Incomparable };

/// Predicted relation between PD(S,a) and PD(S,b); Subset/Superset are strict.
Relation compare(const Scenario& s, const InputCollection& a, const InputCollection& b);

bool is_bell(const Scenario& s, const InputCollection& coll);
bool is_ns(const Scenario& s, const InputCollection& coll);

struct PolytopeClass {
    MsfDescriptor msf;
    std::size_t size = 0;                 // number of collections in the class
    InputCollection representative;       // the unique maximal collection
};

struct ClassificationReport {
    std::vector<PolytopeClass> classes;
    /// relations[i][j] = relation between classes[i] and classes[j].
    std::vector<std::vector<Relation>> relations;
};

ClassificationReport classify_all(const Scenario& s, std::size_t max_collections = 1u << 20);

}  // namespace pdp

#endif
