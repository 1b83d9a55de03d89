#ifndef PDP_BEHAVIOUR_HPP
#define PDP_BEHAVIOUR_HPP

#include "pdp/rational.hpp"
#include "pdp/scenario.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace pdp {

/// A behaviour: one exact conditional distribution per context, stored as a
/// flat rational vector in the scenario's canonical layout.  The flat vector
/// *is* the natural-representation coordinate vector, so Behaviour doubles as
/// BehaviourVector.
class Behaviour {
  public:
    Behaviour(std::shared_ptr<const Scenario> scenario, std::vector<Rat> table);

    static Behaviour from_vector(std::shared_ptr<const Scenario> scenario, std::vector<Rat> v) {
        return Behaviour(std::move(scenario), std::move(v));
    }
    /// wp(a|x) = 1 / |O_x| for every context.
    static Behaviour uniform(std::shared_ptr<const Scenario> scenario);

    const Scenario& scenario() const { return *scenario_; }
    const std::shared_ptr<const Scenario>& scenario_ptr() const { return scenario_; }
    const std::vector<Rat>& table() const { return table_; }
    std::vector<Rat> to_vector() const { return table_; }

    const Rat& prob(std::size_t context, std::size_t outcome) const {
        return table_[scenario_->coord(context, outcome)];
    }
    Rat& prob(std::size_t context, std::size_t outcome) {
        return table_[scenario_->coord(context, outcome)];
    }

    bool operator==(const Behaviour& other) const { return table_ == other.table_; }
    bool operator!=(const Behaviour& other) const { return table_ != other.table_; }

  private:
    std::shared_ptr<const Scenario> scenario_;
    std::vector<Rat> table_;
};

/// Marginal of wp on the sorted party subset V in the given context, as a
/// distribution over V's outcome tuples (mixed radix, last listed party
/// fastest).  V empty yields the single entry 1.
std::vector<Rat> marginal(const Behaviour& wp, const std::vector<std::size_t>& V, std::size_t context);

/// One violated no-signalling constraint: party i's removal marginal differs
/// between two contexts that agree outside i.
struct SignallingWitness {
    std::size_t party;
    std::size_t context_a;
    std::size_t context_b;
    std::vector<std::size_t> outcome_rest;  // outcome components for parties != party
};

std::optional<SignallingWitness> signalling_witness(const Behaviour& wp);
inline bool is_no_signalling(const Behaviour& wp) { return !signalling_witness(wp).has_value(); }

/// Image of a no-signalling behaviour under R_{|M'}.  Throws on a signalling
/// behaviour or an all-empty collection.
Behaviour restrict_behaviour(const Behaviour& wp, const InputCollection& coll);

Behaviour mix(std::span<const std::pair<Rat, Behaviour>> terms);

bool is_predictable(const Behaviour& wp);
bool is_uncorrelated(const Behaviour& wp);
bool is_partially_predictable(const Behaviour& wp, const InputCollection& coll);
bool is_partially_uncorrelated(const Behaviour& wp, const InputCollection& coll);

}  // namespace pdp

#endif
