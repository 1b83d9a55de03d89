#include "pdp/product.hpp"

#include <algorithm>

namespace pdp {

namespace {

bool is_party_block(const Scenario& s, const InputCollection& coll) {
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        const std::uint32_t all = (1u << s.input_count(i)) - 1u;
        if (coll.mask(i) != 0 && coll.mask(i) != all) return false;
    }
    return true;
}

// Marginal of a factor behaviour (over the restricted scenario defined by
// `side`) on the parties F at the parent context `ctx`, indexed by the
// mixed-radix tuple of F's outcomes.
std::vector<Rat> factor_marginal(const Scenario& parent, const InputCollection& side,
                                 const Behaviour& factor, const std::vector<std::size_t>& F,
                                 std::size_t ctx) {
    const Scenario& sub = factor.scenario();
    // Parent party index -> sub party index.
    std::vector<std::size_t> sub_index(parent.party_count(), SIZE_MAX);
    {
        std::size_t k = 0;
        for (std::size_t i = 0; i < parent.party_count(); ++i)
            if (!side.party_empty(i)) sub_index[i] = k++;
    }
    // Sub-context: F-parties take the parent's chosen input, the remaining
    // sub-parties default to their first selected input (no-signalling makes
    // the choice irrelevant, and for whole-party blocks there is no remainder).
    std::vector<std::size_t> sub_ctx(sub.party_count(), 0);
    for (std::size_t i : F) {
        const auto sel = side.selected(i);
        const std::size_t x = parent.context_input(ctx, i);
        const auto it = std::find(sel.begin(), sel.end(), x);
        sub_ctx[sub_index[i]] = static_cast<std::size_t>(it - sel.begin());
    }
    std::vector<std::size_t> sub_F;
    for (std::size_t i : F) sub_F.push_back(sub_index[i]);
    return marginal(factor, sub_F, sub.context_of(sub_ctx));
}

}  // namespace

Behaviour behaviour_product(const std::shared_ptr<const Scenario>& s, const InputCollection& coll,
                            const std::optional<Behaviour>& p, const std::optional<Behaviour>& q) {
    coll.validate(*s);
    const InputCollection comp = complement(*s, coll);
    if (coll.is_full(*s)) {
        if (!p) throw ValidationError("behaviour product: missing left factor");
        if (p->scenario() != *s) throw ValidationError("behaviour product: left factor scenario mismatch");
        return *p;
    }
    if (coll.is_empty()) {
        if (!q) throw ValidationError("behaviour product: missing right factor");
        if (q->scenario() != *s) throw ValidationError("behaviour product: right factor scenario mismatch");
        return *q;
    }
    if (!p || !q) throw ValidationError("behaviour product: both factors required");
    if (p->scenario() != restrict_scenario(*s, coll))
        throw ValidationError("behaviour product: left factor scenario mismatch");
    if (q->scenario() != restrict_scenario(*s, comp))
        throw ValidationError("behaviour product: right factor scenario mismatch");

    const bool block = is_party_block(*s, coll);
    if (!block) {
        if (!is_no_signalling(*p) || !is_no_signalling(*q))
            throw ValidationError(
                "behaviour product: signalling factor on a mixed-input party fails in mixed contexts");
    }

    std::vector<Rat> table(s->d());
    for (std::size_t c = 0; c < s->context_count(); ++c) {
        const auto part = context_partition(*s, coll, c);
        const auto mp = part.predictable.empty() ? std::vector<Rat>{Rat(1)}
                                                 : factor_marginal(*s, coll, *p, part.predictable, c);
        const auto mq = part.free.empty() ? std::vector<Rat>{Rat(1)}
                                          : factor_marginal(*s, comp, *q, part.free, c);
        for (std::size_t t = 0; t < s->outcome_count(c); ++t) {
            std::size_t ip = 0, iq = 0;
            for (std::size_t i : part.predictable) {
                const std::size_t radix = s->outputs(i, s->context_input(c, i)).size();
                ip = ip * radix + s->outcome_component(c, t, i);
            }
            for (std::size_t i : part.free) {
                const std::size_t radix = s->outputs(i, s->context_input(c, i)).size();
                iq = iq * radix + s->outcome_component(c, t, i);
            }
            table[s->coord(c, t)] = mp[ip] * mq[iq];
        }
    }
    return Behaviour(s, std::move(table));
}

VertexSet set_product(const std::shared_ptr<const Scenario>& s, const InputCollection& coll,
                      const VertexSet& left, const VertexSet& right, const PolytopeBudget& budget) {
    if (left.vertices.size() * right.vertices.size() > budget.max_vertices)
        throw BudgetExceeded("set product exceeds the vertex budget");
    VertexSet out;
    out.scenario = s;
    out.family = Family::Composed;
    out.vertices.reserve(left.vertices.size() * right.vertices.size());
    for (const auto& a : left.vertices)
        for (const auto& b : right.vertices)
            out.vertices.push_back(behaviour_product(s, coll, a, b));
    canonicalize(out);
    return out;
}

bool restriction_distributivity_check(const std::shared_ptr<const Scenario>& s,
                                      const InputCollection& coll, const VertexSet& left,
                                      const VertexSet& right, const InputCollection& v) {
    v.validate(*s);
    if (v.is_empty()) throw ValidationError("restriction by the all-empty collection");
    const InputCollection comp = complement(*s, coll);
    const InputCollection w = coll.intersect(v);
    const InputCollection wc = comp.intersect(v);

    const auto sub = std::make_shared<Scenario>(restrict_scenario(*s, v));
    const InputCollection w_in_sub = project_collection(*s, v, w);

    for (const auto& p : left.vertices) {
        for (const auto& q : right.vertices) {
            const Behaviour prod = behaviour_product(s, coll, p, q);
            const Behaviour lhs = restrict_behaviour(prod, v);
            std::optional<Behaviour> pa, qa;
            if (!w.is_empty()) pa = restrict_behaviour(p, project_collection(*s, coll, w));
            if (!wc.is_empty()) qa = restrict_behaviour(q, project_collection(*s, comp, wc));
            const Behaviour rhs = behaviour_product(sub, w_in_sub, pa, qa);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace pdp
