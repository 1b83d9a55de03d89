#include "pdp/applications.hpp"

#include "pdp/product.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace pdp {

Relabeling Relabeling::identity(const Scenario& s) {
    Relabeling r;
    r.input_map.resize(s.party_count());
    r.output_map.resize(s.party_count());
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        r.input_map[i].resize(s.input_count(i));
        std::iota(r.input_map[i].begin(), r.input_map[i].end(), 0);
        r.output_map[i].resize(s.input_count(i));
        for (std::size_t x = 0; x < s.input_count(i); ++x) {
            r.output_map[i][x].resize(s.output_count(i, x));
            std::iota(r.output_map[i][x].begin(), r.output_map[i][x].end(), 0);
        }
    }
    return r;
}

namespace {

void validate_relabeling(const Scenario& s, const Relabeling& rel) {
    if (rel.input_map.size() != s.party_count() || rel.output_map.size() != s.party_count())
        throw ValidationError("relabeling shape mismatch");
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (rel.input_map[i].size() != s.input_count(i))
            throw ValidationError("relabeling input permutation size mismatch");
        for (std::size_t x = 0; x < s.input_count(i); ++x) {
            const std::size_t nx = rel.input_map[i][x];
            if (nx >= s.input_count(i)) throw ValidationError("relabeling input out of range");
            if (s.output_count(i, x) != s.output_count(i, nx))
                throw ValidationError("relabeling across inputs with different output counts");
            if (rel.output_map[i][x].size() != s.output_count(i, x))
                throw ValidationError("relabeling output permutation size mismatch");
        }
    }
}

// Coordinate image under a relabeling: (ctx, t) of the source lands here.
std::size_t relabeled_coord(const Scenario& s, const Relabeling& rel, std::size_t c, std::size_t t) {
    std::vector<std::size_t> new_ctx(s.party_count());
    std::vector<std::size_t> new_out(s.party_count());
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        const std::size_t x = s.context_input(c, i);
        new_ctx[i] = rel.input_map[i][x];
        new_out[i] = rel.output_map[i][x][s.outcome_component(c, t, i)];
    }
    const std::size_t nc = s.context_of(new_ctx);
    return s.coord(nc, s.outcome_of(nc, new_out));
}

}  // namespace

Behaviour apply_relabeling(const Behaviour& wp, const Relabeling& rel) {
    const Scenario& s = wp.scenario();
    validate_relabeling(s, rel);
    std::vector<Rat> table(s.d());
    for (std::size_t c = 0; c < s.context_count(); ++c)
        for (std::size_t t = 0; t < s.outcome_count(c); ++t)
            table[relabeled_coord(s, rel, c, t)] = wp.prob(c, t);
    return Behaviour(wp.scenario_ptr(), std::move(table));
}

AffineFunctional relabel_functional(const Scenario& s, const AffineFunctional& f, const Relabeling& rel) {
    validate_relabeling(s, rel);
    AffineFunctional out;
    out.coeffs.assign(s.d(), Rat(0));
    out.bound = f.bound;
    for (std::size_t c = 0; c < s.context_count(); ++c)
        for (std::size_t t = 0; t < s.outcome_count(c); ++t)
            out.coeffs[relabeled_coord(s, rel, c, t)] = f.coeffs[s.coord(c, t)];
    return out;
}

std::vector<Behaviour> relabeling_orbit(const Behaviour& wp) {
    const Scenario& s = wp.scenario();
    // Enumerate the full local relabeling group (input permutations x output
    // permutations); practical only for small uniform scenarios.
    std::vector<Relabeling> group;
    Relabeling base = Relabeling::identity(s);

    // Recursive assembly party by party.
    std::vector<std::vector<std::size_t>> perms_cache;
    auto perms_of = [&](std::size_t n) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        do { out.push_back(p); } while (std::next_permutation(p.begin(), p.end()));
        return out;
    };

    group.push_back(base);
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        // input permutations (only among inputs with equal output counts)
        std::vector<Relabeling> next;
        for (const auto& g : group) {
            for (const auto& ip : perms_of(s.input_count(i))) {
                bool ok = true;
                for (std::size_t x = 0; x < ip.size(); ++x)
                    if (s.output_count(i, x) != s.output_count(i, ip[x])) { ok = false; break; }
                if (!ok) continue;
                Relabeling h = g;
                h.input_map[i] = ip;
                next.push_back(std::move(h));
            }
        }
        group = std::move(next);
        for (std::size_t x = 0; x < s.input_count(i); ++x) {
            std::vector<Relabeling> widened;
            for (const auto& g : group) {
                for (const auto& op : perms_of(s.output_count(i, x))) {
                    Relabeling h = g;
                    h.output_map[i][x] = op;
                    widened.push_back(std::move(h));
                }
            }
            group = std::move(widened);
            if (group.size() > 100'000) throw BudgetExceeded("relabeling group too large");
        }
    }

    std::vector<Behaviour> orbit;
    for (const auto& g : group) orbit.push_back(apply_relabeling(wp, g));
    std::sort(orbit.begin(), orbit.end(),
              [](const Behaviour& a, const Behaviour& b) { return a.table() < b.table(); });
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

namespace {

void require_shape(const Scenario& s, std::size_t parties, std::size_t inputs, std::size_t outputs,
                   const std::string& what) {
    bool ok = s.party_count() == parties;
    for (std::size_t i = 0; ok && i < s.party_count(); ++i) {
        ok = s.input_count(i) == inputs;
        for (std::size_t x = 0; ok && x < inputs; ++x) ok = s.output_count(i, x) == outputs;
    }
    if (!ok) throw ValidationError(what + " needs a " + std::to_string(parties) + "-party " +
                                   std::to_string(inputs) + "-input " + std::to_string(outputs) +
                                   "-output scenario");
}

// Sign of outcome a under the first-output-is-+1 convention.
int sgn(std::size_t a) { return a == 0 ? 1 : -1; }

// Adds sign * <product of all parties' outcomes> of the given context.
void add_full_correlator(const Scenario& s, Vec& coeffs, std::size_t c, int sign) {
    for (std::size_t t = 0; t < s.outcome_count(c); ++t) {
        int prod = sign;
        for (std::size_t i = 0; i < s.party_count(); ++i) prod *= sgn(s.outcome_component(c, t, i));
        coeffs[s.coord(c, t)] += prod;
    }
}

}  // namespace

Inequality build_inequality(const std::shared_ptr<const Scenario>& s, InequalityFamily family,
                            const Relabeling& rel) {
    AffineFunctional base;
    base.coeffs.assign(s->d(), Rat(0));
    std::string tag;
    switch (family) {
        case InequalityFamily::CHSH: {
            require_shape(*s, 2, 2, 2, "CHSH");
            // sum_{x != (2,2)} C_x - C_{(2,2)} <= 2
            for (std::size_t c = 0; c < 4; ++c) add_full_correlator(*s, base.coeffs, c, c == 3 ? -1 : 1);
            base.bound = 2;
            tag = "CHSH";
            break;
        }
        case InequalityFamily::CH: {
            require_shape(*s, 2, 2, 2, "CH");
            // p(00|00) + p(00|01) + p(00|10) - p(00|11) - pA(0|0) - pB(0|0) <= 0,
            // marginals expanded in the first context.
            auto joint00 = [&](std::size_t c) { return s->coord(c, 0); };
            base.coeffs[joint00(0)] += 1;
            base.coeffs[joint00(1)] += 1;
            base.coeffs[joint00(2)] += 1;
            base.coeffs[joint00(3)] -= 1;
            // pA(0|x=0) = p(00|00) + p(01|00); pB(0|y=0) = p(00|00) + p(10|00)
            base.coeffs[s->coord(0, 0)] -= 2;
            base.coeffs[s->coord(0, 1)] -= 1;
            base.coeffs[s->coord(0, 2)] -= 1;
            base.bound = 0;
            tag = "CH";
            break;
        }
        case InequalityFamily::Sliwa3A:
        case InequalityFamily::Sliwa3B:
        case InequalityFamily::Sliwa3C: {
            require_shape(*s, 3, 2, 2, "Sliwa-3");
            // 3A: <A1B1C1> + <A2B1C1> + <A1B2C2> - <A2B2C2> <= 2; 3B and 3C are
            // the A<->B and A<->C relabelings.
            std::vector<std::array<std::size_t, 3>> terms;
            std::vector<int> signs{1, 1, 1, -1};
            if (family == InequalityFamily::Sliwa3A) {
                terms = {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {1, 1, 1}};
                tag = "Sliwa3A";
            } else if (family == InequalityFamily::Sliwa3B) {
                terms = {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}};
                tag = "Sliwa3B";
            } else {
                terms = {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}};
                tag = "Sliwa3C";
            }
            for (std::size_t k = 0; k < terms.size(); ++k) {
                const std::size_t c = s->context_of({terms[k][0], terms[k][1], terms[k][2]});
                add_full_correlator(*s, base.coeffs, c, signs[k]);
            }
            base.bound = 2;
            break;
        }
    }
    return Inequality{relabel_functional(*s, base, rel), tag};
}

Inequality build_inequality(const std::shared_ptr<const Scenario>& s, InequalityFamily family) {
    return build_inequality(s, family, Relabeling::identity(*s));
}

Rat evaluate(const Inequality& iq, const Behaviour& wp) {
    if (iq.functional.coeffs.size() != wp.table().size())
        throw ValidationError("inequality/behaviour dimension mismatch");
    return iq.functional.evaluate(wp.table());
}

Behaviour pr_box(const std::shared_ptr<const Scenario>& s, const Relabeling& rel) {
    require_shape(*s, 2, 2, 2, "PR box");
    std::vector<Rat> table(s->d(), Rat(0));
    const Rat half(1, 2);
    for (std::size_t c = 0; c < 4; ++c) {
        const bool starred = (c == 3);  // both parties use their second input
        for (std::size_t t = 0; t < 4; ++t) {
            const bool equal = s->outcome_component(c, t, 0) == s->outcome_component(c, t, 1);
            if (equal != starred) table[s->coord(c, t)] = half;
        }
    }
    return apply_relabeling(Behaviour(s, std::move(table)), rel);
}

Behaviour pr_box(const std::shared_ptr<const Scenario>& s) {
    return pr_box(s, Relabeling::identity(*s));
}

Behaviour partial_pr_box(const std::shared_ptr<const Scenario>& s, std::size_t party) {
    require_shape(*s, 3, 2, 2, "partial PR box");
    if (party >= 3) throw ValidationError("party index out of range");
    const InputCollection block = InputCollection::party_block(*s, {party});
    auto det_s = std::make_shared<Scenario>(restrict_scenario(*s, block));
    auto pr_s = std::make_shared<Scenario>(restrict_scenario(*s, complement(*s, block)));
    // Deterministic single party: first output (+1) for both inputs.
    std::vector<Rat> det(det_s->d(), Rat(0));
    for (std::size_t c = 0; c < det_s->context_count(); ++c) det[det_s->coord(c, 0)] = 1;
    return behaviour_product(s, block, Behaviour(det_s, std::move(det)), pr_box(pr_s));
}

InseparabilityReport inseparability_report(const Behaviour& wp,
                                           const std::vector<std::vector<std::size_t>>& subsets,
                                           const PolytopeBudget& budget) {
    if (subsets.empty()) throw ValidationError("empty collection of party subsets");
    const auto& s = wp.scenario_ptr();
    InseparabilityReport report;
    std::vector<VertexSet> sets;
    for (const auto& subset : subsets) {
        if (subset.empty()) throw ValidationError("empty party subset in the collection");
        const InputCollection coll = InputCollection::party_block(*s, subset);
        sets.push_back(pd_vertices(s, coll, budget));
        InseparabilityEntry e;
        e.subset = subset;
        e.certificate = membership(wp, sets.back());
        e.inside = is_inside(e.certificate);
        report.entries.push_back(std::move(e));
    }
    report.inside_intersection =
        std::all_of(report.entries.begin(), report.entries.end(), [](const auto& e) { return e.inside; });
    report.inside_union =
        std::any_of(report.entries.begin(), report.entries.end(), [](const auto& e) { return e.inside; });
    std::vector<const VertexSet*> ptrs;
    for (const auto& v : sets) ptrs.push_back(&v);
    const VertexSet hull = merge(ptrs);
    report.hull_certificate = membership(wp, hull);
    report.inside_hull = is_inside(report.hull_certificate);
    return report;
}

VertexSet ns2_vertices(const std::shared_ptr<const Scenario>& s, const PolytopeBudget& budget) {
    if (s->party_count() != 3) throw ValidationError("NS2 set is defined for tripartite scenarios");
    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < 3; ++i)
        parts.push_back(pd_vertices(s, InputCollection::party_block(*s, {i}), budget));
    VertexSet out = merge({&parts[0], &parts[1], &parts[2]});
    out.family = Family::Composed;
    return out;
}

VertexSet svetlichny_vertices(const std::shared_ptr<const Scenario>& s, const PolytopeBudget& budget) {
    if (s->party_count() != 3) throw ValidationError("Svetlichny set is defined for tripartite scenarios");
    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < 3; ++i) {
        const InputCollection block = InputCollection::party_block(*s, {i});
        auto left_s = std::make_shared<Scenario>(restrict_scenario(*s, block));
        auto right_s = std::make_shared<Scenario>(restrict_scenario(*s, complement(*s, block)));
        parts.push_back(set_product(s, block, bell_vertices(left_s, budget),
                                    e_vertices(right_s, budget), budget));
    }
    VertexSet out = merge({&parts[0], &parts[1], &parts[2]});
    out.family = Family::Composed;
    return out;
}

VertexSet broadcast_local_vertices(const std::shared_ptr<const Scenario>& s,
                                   const std::vector<std::size_t>& receivers,
                                   const std::vector<std::vector<std::size_t>>& blocks,
                                   const PolytopeBudget& budget) {
    std::set<std::size_t> seen(receivers.begin(), receivers.end());
    if (seen.size() != receivers.size()) throw ValidationError("duplicate party among receivers");
    for (const auto& b : blocks) {
        if (b.empty()) throw ValidationError("empty broadcast block");
        for (std::size_t i : b)
            if (!seen.insert(i).second) throw ValidationError("overlapping broadcast blocks");
    }
    if (seen.size() != s->party_count())
        throw ValidationError("receivers and blocks must cover all parties");

    if (blocks.empty()) return pd_vertices(s, InputCollection::party_block(*s, receivers), budget);
    if (receivers.empty() && blocks.size() == 1) {
        VertexSet out = ns_vertices(s, budget);
        out.family = Family::Composed;
        return out;
    }

    // Fold B(S^{I_L}) with one NS factor per block, left to right.
    std::vector<std::size_t> acc_parties = receivers;
    std::optional<VertexSet> acc;
    if (!receivers.empty()) {
        auto first_s =
            std::make_shared<Scenario>(restrict_scenario(*s, InputCollection::party_block(*s, receivers)));
        acc = bell_vertices(first_s, budget);
    }
    for (const auto& b : blocks) {
        auto block_s =
            std::make_shared<Scenario>(restrict_scenario(*s, InputCollection::party_block(*s, b)));
        VertexSet factor = ns_vertices(block_s, budget);
        if (!acc) {
            acc = std::move(factor);
            acc_parties = b;
            continue;
        }
        std::vector<std::size_t> merged = acc_parties;
        merged.insert(merged.end(), b.begin(), b.end());
        const InputCollection merged_block = InputCollection::party_block(*s, merged);
        auto target = merged.size() == s->party_count()
                          ? s
                          : std::make_shared<Scenario>(restrict_scenario(*s, merged_block));
        const InputCollection split =
            project_collection(*s, merged_block, InputCollection::party_block(*s, acc_parties));
        acc = set_product(target, split, *acc, factor, budget);
        acc_parties = std::move(merged);
    }
    acc->family = Family::Composed;
    return std::move(*acc);
}

void SequentialScenario::validate() const {
    if (!base) throw ValidationError("sequential scenario without base");
    if (query_counts.size() != base->party_count())
        throw ValidationError("query count list length mismatch");
    for (std::size_t i = 0; i < query_counts.size(); ++i)
        if (query_counts[i] > base->input_count(i))
            throw ValidationError("more queries than inputs for party '" + base->party(i) + "'");
}

std::pair<std::shared_ptr<const Scenario>, InputCollection> sequential_to_pd(
    const SequentialScenario& sw) {
    sw.validate();
    std::vector<std::uint32_t> masks(sw.base->party_count());
    for (std::size_t i = 0; i < masks.size(); ++i)
        masks[i] = (sw.query_counts[i] >= 32) ? ~0u : ((1u << sw.query_counts[i]) - 1u);
    return {sw.base, InputCollection(std::move(masks))};
}

}  // namespace pdp
