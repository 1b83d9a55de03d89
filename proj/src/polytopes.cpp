#include "pdp/polytopes.hpp"

#include "pdp/product.hpp"

#include <algorithm>

namespace pdp {

std::string family_name(Family f) {
    switch (f) {
        case Family::E: return "e";
        case Family::Bell: return "bell";
        case Family::NS: return "ns";
        case Family::PD: return "pd";
        case Family::Composed: return "composed";
    }
    return "?";
}

VRep VertexSet::vrep() const {
    VRep v;
    v.dim = scenario->d();
    v.points.reserve(vertices.size());
    for (const auto& b : vertices) v.points.push_back(b.table());
    return v;
}

bool VertexSet::contains(const Behaviour& b) const {
    return std::binary_search(vertices.begin(), vertices.end(), b,
                              [](const Behaviour& x, const Behaviour& y) { return x.table() < y.table(); });
}

void canonicalize(VertexSet& set) {
    std::sort(set.vertices.begin(), set.vertices.end(),
              [](const Behaviour& a, const Behaviour& b) { return a.table() < b.table(); });
    set.vertices.erase(std::unique(set.vertices.begin(), set.vertices.end()), set.vertices.end());
}

VertexSet merge(const std::vector<const VertexSet*>& sets) {
    if (sets.empty()) throw ValidationError("merge of no vertex sets");
    VertexSet out;
    out.scenario = sets.front()->scenario;
    out.family = Family::Composed;
    for (const auto* s : sets) {
        if (*s->scenario != *out.scenario) throw ValidationError("merging vertex sets of different scenarios");
        out.vertices.insert(out.vertices.end(), s->vertices.begin(), s->vertices.end());
    }
    canonicalize(out);
    return out;
}

HRep ns_hrep(const Scenario& s) {
    HRep h;
    h.dim = s.d();
    for (std::size_t k = 0; k < s.d(); ++k) {
        Vec c(s.d(), Rat(0));
        c[k] = -1;
        h.inequalities.push_back({std::move(c), Rat(0)});
    }
    for (std::size_t c = 0; c < s.context_count(); ++c) {
        Vec e(s.d(), Rat(0));
        for (std::size_t t = 0; t < s.outcome_count(c); ++t) e[s.coord(c, t)] = 1;
        h.equalities.push_back({std::move(e), Rat(1)});
    }
    // Marginal of I\{i} agrees between any context and its input-0 sibling.
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < s.party_count(); ++j)
            if (j != i) rest.push_back(j);
        for (std::size_t c = 0; c < s.context_count(); ++c) {
            if (s.context_input(c, i) == 0) continue;
            auto ref = s.context(c);
            ref[i] = 0;
            const std::size_t c0 = s.context_of(ref);
            std::size_t rest_sz = 1;
            for (std::size_t j : rest) rest_sz *= s.outputs(j, s.context_input(c, j)).size();
            for (std::size_t g = 0; g < rest_sz; ++g) {
                Vec e(s.d(), Rat(0));
                auto group_index = [&](std::size_t ctx, std::size_t t) {
                    std::size_t idx = 0;
                    for (std::size_t j : rest) {
                        const std::size_t radix = s.outputs(j, s.context_input(ctx, j)).size();
                        idx = idx * radix + s.outcome_component(ctx, t, j);
                    }
                    return idx;
                };
                for (std::size_t t = 0; t < s.outcome_count(c); ++t)
                    if (group_index(c, t) == g) e[s.coord(c, t)] += 1;
                for (std::size_t t = 0; t < s.outcome_count(c0); ++t)
                    if (group_index(c0, t) == g) e[s.coord(c0, t)] -= 1;
                h.equalities.push_back({std::move(e), Rat(0)});
            }
        }
    }
    return h;
}

VertexSet e_vertices(std::shared_ptr<const Scenario> s, const PolytopeBudget& budget) {
    std::size_t count = 1;
    for (std::size_t c = 0; c < s->context_count(); ++c) {
        if (count > budget.max_vertices / s->outcome_count(c) + 1)
            throw BudgetExceeded("e_vertices count exceeds the budget");
        count *= s->outcome_count(c);
    }
    if (count > budget.max_vertices) throw BudgetExceeded("e_vertices count exceeds the budget");

    VertexSet out;
    out.scenario = s;
    out.family = Family::E;
    std::vector<std::size_t> choice(s->context_count(), 0);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Rat> t(s->d(), Rat(0));
        for (std::size_t c = 0; c < s->context_count(); ++c) t[s->coord(c, choice[c])] = 1;
        out.vertices.emplace_back(s, std::move(t));
        for (std::size_t c = s->context_count(); c-- > 0;) {
            if (++choice[c] < s->outcome_count(c)) break;
            choice[c] = 0;
        }
    }
    canonicalize(out);
    return out;
}

VertexSet bell_vertices(std::shared_ptr<const Scenario> s, const PolytopeBudget& budget) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < s->party_count(); ++i)
        for (std::size_t x = 0; x < s->input_count(i); ++x) {
            if (count > budget.max_vertices / s->output_count(i, x) + 1)
                throw BudgetExceeded("bell_vertices count exceeds the budget");
            count *= s->output_count(i, x);
        }
    if (count > budget.max_vertices) throw BudgetExceeded("bell_vertices count exceeds the budget");

    VertexSet out;
    out.scenario = s;
    out.family = Family::Bell;
    // One outcome assignment per (party, input) pair, odometer order.
    std::vector<std::vector<std::size_t>> assign(s->party_count());
    for (std::size_t i = 0; i < s->party_count(); ++i) assign[i].assign(s->input_count(i), 0);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Rat> t(s->d(), Rat(0));
        for (std::size_t c = 0; c < s->context_count(); ++c) {
            std::vector<std::size_t> comps(s->party_count());
            for (std::size_t i = 0; i < s->party_count(); ++i)
                comps[i] = assign[i][s->context_input(c, i)];
            t[s->coord(c, s->outcome_of(c, comps))] = 1;
        }
        out.vertices.emplace_back(s, std::move(t));
        for (std::size_t i = s->party_count(); i-- > 0;) {
            bool carried = true;
            for (std::size_t x = s->input_count(i); x-- > 0;) {
                if (++assign[i][x] < s->output_count(i, x)) { carried = false; break; }
                assign[i][x] = 0;
            }
            if (!carried) break;
        }
    }
    canonicalize(out);
    return out;
}

VertexSet ns_vertices(std::shared_ptr<const Scenario> s, const PolytopeBudget& budget) {
    std::size_t multi_input = 0;
    std::vector<std::size_t> single_input;
    for (std::size_t i = 0; i < s->party_count(); ++i) {
        if (s->input_count(i) >= 2)
            ++multi_input;
        else
            single_input.push_back(i);
    }
    // NS(S) = B(S) when at most one party has more than one input.
    if (multi_input <= 1) {
        VertexSet out = bell_vertices(s, budget);
        out.family = Family::NS;
        return out;
    }
    // Split off single-input parties: their block only supports deterministic
    // extremal behaviour, so Ext(NS(S)) = Ext(B(S_V)) x Ext(NS(S_Vperp)).
    if (!single_input.empty()) {
        const InputCollection block = InputCollection::party_block(*s, single_input);
        auto left_s = std::make_shared<Scenario>(restrict_scenario(*s, block));
        auto right_s = std::make_shared<Scenario>(restrict_scenario(*s, complement(*s, block)));
        const VertexSet left = bell_vertices(left_s, budget);
        const VertexSet right = ns_vertices(right_s, budget);
        VertexSet out = set_product(s, block, left, right, budget);
        out.family = Family::NS;
        out.collection.reset();
        return out;
    }

    const VRep v = vertices_from_hrep(ns_hrep(*s), budget.enumeration);
    if (v.points.size() > budget.max_vertices) throw BudgetExceeded("ns_vertices exceeds the budget");
    VertexSet out;
    out.scenario = s;
    out.family = Family::NS;
    out.vertices.reserve(v.points.size());
    for (auto& p : v.points) out.vertices.emplace_back(s, std::move(p));
    canonicalize(out);
    return out;
}

VertexSet pd_vertices(std::shared_ptr<const Scenario> s, const InputCollection& coll,
                      const PolytopeBudget& budget) {
    coll.validate(*s);
    if (coll.is_full(*s)) {
        VertexSet out = bell_vertices(s, budget);
        out.family = Family::PD;
        out.collection = coll;
        return out;
    }
    if (coll.is_empty()) {
        VertexSet out = ns_vertices(s, budget);
        out.family = Family::PD;
        out.collection = coll;
        return out;
    }
    const InputCollection comp = complement(*s, coll);
    auto left_s = std::make_shared<Scenario>(restrict_scenario(*s, coll));
    auto right_s = std::make_shared<Scenario>(restrict_scenario(*s, comp));
    const VertexSet left = bell_vertices(left_s, budget);
    const VertexSet right = ns_vertices(right_s, budget);
    VertexSet out = set_product(s, coll, left, right, budget);
    out.family = Family::PD;
    out.collection = coll;

    // Vertex invariant: partially predictable w.r.t. M' and no-signalling.
    if (out.vertices.size() <= 10'000) {
        for (const auto& v : out.vertices) {
            if (!is_partially_predictable(v, coll))
                throw ValidationError("internal: pd vertex fails partial predictability");
            if (!is_no_signalling(v))
                throw ValidationError("internal: pd vertex fails no-signalling");
        }
    }
    return out;
}

MembershipCertificate membership(const Behaviour& wp, const VertexSet& set) {
    if (wp.scenario() != *set.scenario)
        throw ValidationError("membership query scenario mismatch");
    return lp_membership(wp.table(), set.vrep());
}

}  // namespace pdp
