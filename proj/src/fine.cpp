#include "pdp/fine.hpp"

#include "pdp/product.hpp"

#include <algorithm>

namespace pdp {

namespace {

struct AlphaAxis {
    std::size_t party;
    std::size_t input;
    std::size_t radix;
};

std::vector<AlphaAxis> alpha_axes(const Scenario& s, const InputCollection& coll) {
    std::vector<AlphaAxis> axes;
    for (std::size_t i = 0; i < s.party_count(); ++i)
        for (std::size_t x : coll.selected(i))
            axes.push_back({i, x, s.outputs(i, x).size()});
    return axes;
}

std::size_t axis_component(const std::vector<AlphaAxis>& axes, std::size_t alpha, std::size_t axis) {
    std::size_t rem = alpha;
    for (std::size_t k = axes.size(); k-- > 0;) {
        if (k == axis) return rem % axes[k].radix;
        rem /= axes[k].radix;
    }
    throw ValidationError("alpha axis out of range");
}

// Deterministic outcome of a Bell vertex for one (party, input) pair of its
// own scenario.
std::size_t determined_outcome(const Behaviour& det, std::size_t party, std::size_t input) {
    const Scenario& s = det.scenario();
    std::vector<std::size_t> ctx(s.party_count(), 0);
    ctx[party] = input;
    const auto m = marginal(det, {party}, s.context_of(ctx));
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a] == 1) return a;
        if (m[a] != 0) throw ValidationError("model term is not deterministic");
    }
    throw ValidationError("model term is not deterministic");
}

}  // namespace

JointDistribution fine_joint_one_multi_party(const Behaviour& wp) {
    const Scenario& s = wp.scenario();
    std::optional<std::size_t> multi;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (s.input_count(i) < 2) continue;
        if (multi) throw ValidationError("more than one multi-input party");
        multi = i;
    }
    if (!is_no_signalling(wp))
        throw ValidationError("fine joint requires a no-signalling behaviour");

    JointDistribution j;
    j.scenario = wp.scenario_ptr();
    j.coll = InputCollection::full(s);
    const auto axes = alpha_axes(s, j.coll);
    j.alpha_count = 1;
    for (const auto& a : axes) {
        j.alpha_radices.push_back(a.radix);
        j.alpha_count *= a.radix;
    }
    std::vector<Rat> table(j.alpha_count, Rat(0));

    std::vector<std::size_t> rest;
    if (multi)
        for (std::size_t i = 0; i < s.party_count(); ++i)
            if (i != *multi) rest.push_back(i);

    for (std::size_t alpha = 0; alpha < j.alpha_count; ++alpha) {
        // Outcome of axis (i, x) for this alpha.
        auto outcome_at = [&](std::size_t party, std::size_t input) {
            for (std::size_t k = 0; k < axes.size(); ++k)
                if (axes[k].party == party && axes[k].input == input)
                    return axis_component(axes, alpha, k);
            throw ValidationError("missing alpha axis");
        };
        if (!multi) {
            std::vector<std::size_t> comps(s.party_count());
            for (std::size_t i = 0; i < s.party_count(); ++i) comps[i] = outcome_at(i, 0);
            table[alpha] = wp.prob(0, s.outcome_of(0, comps));
            continue;
        }
        // Shared marginal of the single-input parties.
        const auto m = marginal(wp, rest, 0);
        std::size_t rest_idx = 0;
        for (std::size_t i : rest) {
            const std::size_t radix = s.outputs(i, 0).size();
            rest_idx = rest_idx * radix + outcome_at(i, 0);
        }
        const Rat den = m[rest_idx];
        if (den == 0) { table[alpha] = 0; continue; }

        Rat num = 1;
        std::vector<std::size_t> ctx(s.party_count(), 0);
        std::vector<std::size_t> comps(s.party_count());
        for (std::size_t x = 0; x < s.input_count(*multi); ++x) {
            ctx[*multi] = x;
            const std::size_t c = s.context_of(ctx);
            for (std::size_t i : rest) comps[i] = outcome_at(i, 0);
            comps[*multi] = outcome_at(*multi, x);
            num *= wp.prob(c, s.outcome_of(c, comps));
        }
        Rat denpow = 1;
        for (std::size_t k = 1; k < s.input_count(*multi); ++k) denpow *= den;
        table[alpha] = num / denpow;
    }

    Rat sum = 0;
    for (const Rat& p : table) sum += p;
    if (sum != 1) throw ValidationError("internal: fine joint not normalized");
    j.tables.push_back(std::move(table));
    return j;
}

PartialModel model_from_certificate(const Behaviour& wp, const MembershipCertificate& cert,
                                    const VertexSet& pd_set) {
    if (!is_inside(cert)) throw ValidationError("cannot extract a model from an Outside certificate");
    if (!pd_set.collection) throw ValidationError("vertex set carries no input collection");
    const auto& inside = std::get<InsideCertificate>(cert);
    if (inside.weights.size() != pd_set.vertices.size())
        throw ValidationError("certificate length mismatch");
    const auto& s = pd_set.scenario;
    const InputCollection& coll = *pd_set.collection;
    const InputCollection comp = complement(*s, coll);

    PartialModel model;
    model.scenario = s;
    model.coll = coll;
    for (std::size_t k = 0; k < inside.weights.size(); ++k) {
        const Rat& w = inside.weights[k];
        if (w == 0) continue;
        PartialModelTerm term;
        term.weight = w;
        if (!coll.is_empty()) term.deterministic = restrict_behaviour(pd_set.vertices[k], coll);
        if (!comp.is_empty()) term.ns_part = restrict_behaviour(pd_set.vertices[k], comp);
        model.terms.push_back(std::move(term));
    }

    // Exact re-evaluation.
    std::vector<Rat> acc(s->d(), Rat(0));
    for (const auto& t : model.terms) {
        const Behaviour b = behaviour_product(s, coll, t.deterministic, t.ns_part);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t.weight * b.table()[i];
    }
    if (acc != wp.table()) throw ValidationError("internal: model does not reproduce the behaviour");
    return model;
}

JointDistribution partial_joint_from_model(const PartialModel& model) {
    const Scenario& s = *model.scenario;
    const InputCollection& coll = model.coll;
    const InputCollection comp = complement(s, coll);

    JointDistribution j;
    j.scenario = model.scenario;
    j.coll = coll;
    const auto axes = alpha_axes(s, coll);
    j.alpha_count = 1;
    for (const auto& a : axes) {
        j.alpha_radices.push_back(a.radix);
        j.alpha_count *= a.radix;
    }

    std::optional<Scenario> sperp;
    if (!comp.is_empty()) sperp = restrict_scenario(s, comp);
    const std::size_t n_ctx = sperp ? sperp->context_count() : 1;
    j.tables.assign(n_ctx, {});
    for (std::size_t c = 0; c < n_ctx; ++c)
        j.tables[c].assign(j.alpha_count * (sperp ? sperp->outcome_count(c) : 1), Rat(0));

    for (const auto& term : model.terms) {
        // Alpha index determined by the deterministic factor.
        std::size_t alpha = 0;
        if (!coll.is_empty()) {
            std::vector<std::size_t> sub_party(s.party_count(), SIZE_MAX);
            std::size_t k = 0;
            for (std::size_t i = 0; i < s.party_count(); ++i)
                if (!coll.party_empty(i)) sub_party[i] = k++;
            for (const auto& axis : axes) {
                const auto sel = coll.selected(axis.party);
                const std::size_t pos = static_cast<std::size_t>(
                    std::find(sel.begin(), sel.end(), axis.input) - sel.begin());
                const std::size_t a = determined_outcome(*term.deterministic, sub_party[axis.party], pos);
                alpha = alpha * axis.radix + a;
            }
        }
        if (!sperp) {
            j.tables[0][alpha] += term.weight;
        } else {
            for (std::size_t c = 0; c < n_ctx; ++c)
                for (std::size_t b = 0; b < sperp->outcome_count(c); ++b)
                    j.tables[c][alpha * sperp->outcome_count(c) + b] +=
                        term.weight * term.ns_part->prob(c, b);
        }
    }
    return j;
}

bool verify_joint(const JointDistribution& joint, const Behaviour& wp) {
    const Scenario& s = wp.scenario();
    if (*joint.scenario != s) return false;
    const InputCollection& coll = joint.coll;
    const InputCollection comp = complement(s, coll);
    const auto axes = alpha_axes(s, coll);
    {
        std::size_t count = 1;
        for (const auto& a : axes) count *= a.radix;
        if (count != joint.alpha_count) return false;
    }

    std::optional<Scenario> sperp;
    if (!comp.is_empty()) sperp = restrict_scenario(s, comp);
    const std::size_t n_ctx = sperp ? sperp->context_count() : 1;
    if (joint.tables.size() != n_ctx) return false;

    // Shape, positivity, normalization.
    for (std::size_t c = 0; c < n_ctx; ++c) {
        const std::size_t want = joint.alpha_count * (sperp ? sperp->outcome_count(c) : 1);
        if (joint.tables[c].size() != want) return false;
        Rat sum = 0;
        for (const Rat& p : joint.tables[c]) {
            if (p < 0) return false;
            sum += p;
        }
        if (sum != 1) return false;
    }

    // The family must be no-signalling once alpha is held by an auxiliary
    // single-input party.
    if (sperp) {
        std::vector<std::string> parties{"__alpha__"};
        std::vector<std::vector<std::string>> inputs{{"q"}};
        std::vector<std::string> alpha_outs;
        for (std::size_t a = 0; a < joint.alpha_count; ++a) alpha_outs.push_back("g" + std::to_string(a));
        std::vector<std::vector<std::vector<std::string>>> outputs{{alpha_outs}};
        for (std::size_t i = 0; i < sperp->party_count(); ++i) {
            parties.push_back(sperp->party(i));
            inputs.push_back(sperp->inputs(i));
            std::vector<std::vector<std::string>> outs;
            for (std::size_t x = 0; x < sperp->input_count(i); ++x) outs.push_back(sperp->outputs(i, x));
            outputs.push_back(std::move(outs));
        }
        auto ext = std::make_shared<Scenario>(std::move(parties), std::move(inputs), std::move(outputs));
        std::vector<Rat> flat;
        flat.reserve(ext->d());
        for (const auto& tab : joint.tables) flat.insert(flat.end(), tab.begin(), tab.end());
        if (!is_no_signalling(Behaviour(ext, std::move(flat)))) return false;
    }

    // Marginal recovery for every context of S and every consistent beta context.
    std::vector<std::size_t> sub_party(s.party_count(), SIZE_MAX);
    if (sperp) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < s.party_count(); ++i)
            if (!comp.party_empty(i)) sub_party[i] = k++;
    }
    for (std::size_t c = 0; c < s.context_count(); ++c) {
        const auto part = context_partition(s, coll, c);
        // All beta contexts agreeing with c on the free parties.
        std::vector<std::size_t> compatible;
        if (!sperp) {
            compatible.push_back(0);
        } else {
            for (std::size_t cc = 0; cc < sperp->context_count(); ++cc) {
                bool ok = true;
                for (std::size_t i : part.free) {
                    const auto sel = comp.selected(i);
                    if (sel[sperp->context_input(cc, sub_party[i])] != s.context_input(c, i)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) compatible.push_back(cc);
            }
        }
        for (std::size_t t = 0; t < s.outcome_count(c); ++t) {
            const Rat expected = wp.prob(c, t);
            for (std::size_t cc : compatible) {
                Rat sum = 0;
                const std::size_t beta_n = sperp ? sperp->outcome_count(cc) : 1;
                for (std::size_t alpha = 0; alpha < joint.alpha_count; ++alpha) {
                    bool alpha_ok = true;
                    for (std::size_t k = 0; k < axes.size() && alpha_ok; ++k) {
                        const auto& ax = axes[k];
                        if (s.context_input(c, ax.party) != ax.input) continue;
                        if (!coll.contains(ax.party, s.context_input(c, ax.party))) continue;
                        if (axis_component(axes, alpha, k) != s.outcome_component(c, t, ax.party))
                            alpha_ok = false;
                    }
                    if (!alpha_ok) continue;
                    for (std::size_t b = 0; b < beta_n; ++b) {
                        bool beta_ok = true;
                        for (std::size_t i : part.free) {
                            if (sperp->outcome_component(cc, b, sub_party[i]) !=
                                s.outcome_component(c, t, i)) {
                                beta_ok = false;
                                break;
                            }
                        }
                        if (beta_ok) sum += joint.tables[cc][alpha * beta_n + b];
                    }
                }
                if (sum != expected) return false;
            }
        }
    }
    return true;
}

}  // namespace pdp
