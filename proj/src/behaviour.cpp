#include "pdp/behaviour.hpp"

#include <algorithm>

namespace pdp {

Behaviour::Behaviour(std::shared_ptr<const Scenario> scenario, std::vector<Rat> table)
    : scenario_(std::move(scenario)), table_(std::move(table)) {
    if (!scenario_) throw ValidationError("behaviour without scenario");
    if (table_.size() != scenario_->d()) throw ValidationError("behaviour table size mismatch");
    for (std::size_t c = 0; c < scenario_->context_count(); ++c) {
        Rat sum = 0;
        for (std::size_t t = 0; t < scenario_->outcome_count(c); ++t) {
            const Rat& p = table_[scenario_->coord(c, t)];
            if (p < 0) throw ValidationError("negative probability");
            sum += p;
        }
        if (sum != 1) throw ValidationError("context does not sum to 1");
    }
}

Behaviour Behaviour::uniform(std::shared_ptr<const Scenario> scenario) {
    std::vector<Rat> t(scenario->d());
    for (std::size_t c = 0; c < scenario->context_count(); ++c) {
        const Rat p(1, static_cast<long>(scenario->outcome_count(c)));
        for (std::size_t k = 0; k < scenario->outcome_count(c); ++k)
            t[scenario->coord(c, k)] = p;
    }
    return Behaviour(std::move(scenario), std::move(t));
}

std::vector<Rat> marginal(const Behaviour& wp, const std::vector<std::size_t>& V, std::size_t context) {
    const Scenario& s = wp.scenario();
    std::size_t size = 1;
    for (std::size_t i : V) size *= s.outputs(i, s.context_input(context, i)).size();
    std::vector<Rat> out(size, Rat(0));
    for (std::size_t t = 0; t < s.outcome_count(context); ++t) {
        std::size_t idx = 0;
        for (std::size_t i : V) {
            const std::size_t radix = s.outputs(i, s.context_input(context, i)).size();
            idx = idx * radix + s.outcome_component(context, t, i);
        }
        out[idx] += wp.prob(context, t);
    }
    return out;
}

std::optional<SignallingWitness> signalling_witness(const Behaviour& wp) {
    const Scenario& s = wp.scenario();
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        rest.clear();
        for (std::size_t j = 0; j < s.party_count(); ++j)
            if (j != i) rest.push_back(j);
        // Compare the marginal over I \ {i} between contexts that differ only
        // in party i's input, against the input-0 reference context.
        for (std::size_t c = 0; c < s.context_count(); ++c) {
            if (s.context_input(c, i) == 0) continue;
            auto ref_ctx = s.context(c);
            ref_ctx[i] = 0;
            const std::size_t c0 = s.context_of(ref_ctx);
            const auto ma = marginal(wp, rest, c);
            const auto mb = marginal(wp, rest, c0);
            if (ma != mb) {
                for (std::size_t idx = 0; idx < ma.size(); ++idx) {
                    if (ma[idx] == mb[idx]) continue;
                    // Decode idx into outcome components of `rest`.
                    std::vector<std::size_t> comps(rest.size());
                    std::size_t rem = idx;
                    for (std::size_t k = rest.size(); k-- > 0;) {
                        const std::size_t j = rest[k];
                        const std::size_t radix = s.outputs(j, s.context_input(c, j)).size();
                        comps[k] = rem % radix;
                        rem /= radix;
                    }
                    return SignallingWitness{i, c, c0, comps};
                }
            }
        }
    }
    return std::nullopt;
}

Behaviour restrict_behaviour(const Behaviour& wp, const InputCollection& coll) {
    const Scenario& s = wp.scenario();
    coll.validate(s);
    if (coll.is_empty()) throw ValidationError("empty restriction");
    if (coll.is_full(s)) return wp;
    if (auto w = signalling_witness(wp))
        throw ValidationError("restriction of a signalling behaviour is undefined");

    auto sub = std::make_shared<Scenario>(restrict_scenario(s, coll));
    std::vector<std::size_t> kept;  // party indices of s present in sub
    for (std::size_t i = 0; i < s.party_count(); ++i)
        if (!coll.party_empty(i)) kept.push_back(i);

    std::vector<Rat> table(sub->d());
    std::vector<std::size_t> joint(s.party_count(), 0);
    for (std::size_t sc = 0; sc < sub->context_count(); ++sc) {
        // Extend the sub-context to a full context of s: kept parties use their
        // selected input, dropped parties default to input 0 (any choice works
        // for a no-signalling behaviour).
        std::fill(joint.begin(), joint.end(), 0);
        for (std::size_t k = 0; k < kept.size(); ++k) {
            const auto sel = coll.selected(kept[k]);
            joint[kept[k]] = sel[sub->context_input(sc, k)];
        }
        const std::size_t c = s.context_of(joint);
        const auto m = marginal(wp, kept, c);
        for (std::size_t t = 0; t < m.size(); ++t) table[sub->coord(sc, t)] = m[t];
    }
    return Behaviour(std::move(sub), std::move(table));
}

Behaviour mix(std::span<const std::pair<Rat, Behaviour>> terms) {
    if (terms.empty()) throw ValidationError("mix of nothing");
    const Scenario& s = terms.front().second.scenario();
    Rat total = 0;
    std::vector<Rat> table(s.d(), Rat(0));
    for (const auto& [w, b] : terms) {
        if (w < 0) throw ValidationError("negative mixing weight");
        if (b.scenario() != s) throw ValidationError("mixing behaviours of different scenarios");
        total += w;
        for (std::size_t k = 0; k < table.size(); ++k) table[k] += w * b.table()[k];
    }
    if (total != 1) throw ValidationError("mixing weights do not sum to 1");
    return Behaviour(terms.front().second.scenario_ptr(), std::move(table));
}

bool is_predictable(const Behaviour& wp) {
    for (const Rat& p : wp.table())
        if (p != 0 && p != 1) return false;
    return true;
}

bool is_uncorrelated(const Behaviour& wp) {
    const Scenario& s = wp.scenario();
    for (std::size_t c = 0; c < s.context_count(); ++c) {
        std::vector<std::vector<Rat>> singles(s.party_count());
        for (std::size_t i = 0; i < s.party_count(); ++i) singles[i] = marginal(wp, {i}, c);
        for (std::size_t t = 0; t < s.outcome_count(c); ++t) {
            Rat prod = 1;
            for (std::size_t i = 0; i < s.party_count(); ++i)
                prod *= singles[i][s.outcome_component(c, t, i)];
            if (prod != wp.prob(c, t)) return false;
        }
    }
    return true;
}

bool is_partially_predictable(const Behaviour& wp, const InputCollection& coll) {
    const Scenario& s = wp.scenario();
    coll.validate(s);
    // Checking the maximal marginal V = F_x per context suffices.
    for (std::size_t c = 0; c < s.context_count(); ++c) {
        const auto part = context_partition(s, coll, c);
        if (part.predictable.empty()) continue;
        for (const Rat& p : marginal(wp, part.predictable, c))
            if (p != 0 && p != 1) return false;
    }
    return true;
}

bool is_partially_uncorrelated(const Behaviour& wp, const InputCollection& coll) {
    const Scenario& s = wp.scenario();
    coll.validate(s);
    for (std::size_t c = 0; c < s.context_count(); ++c) {
        const auto part = context_partition(s, coll, c);
        if (part.predictable.empty()) continue;
        std::vector<std::vector<Rat>> singles(s.party_count());
        for (std::size_t i : part.predictable) singles[i] = marginal(wp, {i}, c);
        const auto rest = marginal(wp, part.free, c);
        for (std::size_t t = 0; t < s.outcome_count(c); ++t) {
            Rat prod = 1;
            for (std::size_t i : part.predictable)
                prod *= singles[i][s.outcome_component(c, t, i)];
            std::size_t idx = 0;
            for (std::size_t i : part.free) {
                const std::size_t radix = s.outputs(i, s.context_input(c, i)).size();
                idx = idx * radix + s.outcome_component(c, t, i);
            }
            prod *= rest[idx];
            if (prod != wp.prob(c, t)) return false;
        }
    }
    return true;
}

}  // namespace pdp
