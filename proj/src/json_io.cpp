#include "pdp/json_io.hpp"

#include <sstream>

namespace pdp {

namespace {

std::string joined(const Scenario& s, std::size_t c, bool outcomes, std::size_t t = 0) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (i) os << ':';
        const std::size_t x = s.context_input(c, i);
        os << (outcomes ? s.outputs(i, x)[s.outcome_component(c, t, i)] : s.inputs(i)[x]);
    }
    return os.str();
}

std::vector<std::string> split(const std::string& str) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : str) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

Json scenario_to_json(const Scenario& s) {
    Json j;
    j["parties"] = s.parties();
    Json inputs = Json::object();
    Json outputs = Json::object();
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        inputs[s.party(i)] = s.inputs(i);
        Json per_input = Json::object();
        for (std::size_t x = 0; x < s.input_count(i); ++x)
            per_input[s.inputs(i)[x]] = s.outputs(i, x);
        outputs[s.party(i)] = std::move(per_input);
    }
    j["inputs"] = std::move(inputs);
    j["outputs"] = std::move(outputs);
    return j;
}

std::shared_ptr<const Scenario> scenario_from_json(const Json& j) {
    if (!j.contains("parties") || !j.contains("inputs") || !j.contains("outputs"))
        throw ValidationError("scenario JSON needs parties/inputs/outputs");
    std::vector<std::string> parties = j.at("parties").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> inputs;
    std::vector<std::vector<std::vector<std::string>>> outputs;
    for (const auto& p : parties) {
        if (!j.at("inputs").contains(p)) throw ValidationError("missing inputs for party '" + p + "'");
        inputs.push_back(j.at("inputs").at(p).get<std::vector<std::string>>());
        std::vector<std::vector<std::string>> outs;
        for (const auto& x : inputs.back()) {
            if (!j.at("outputs").contains(p) || !j.at("outputs").at(p).contains(x))
                throw ValidationError("missing outputs for input '" + x + "' of party '" + p + "'");
            outs.push_back(j.at("outputs").at(p).at(x).get<std::vector<std::string>>());
        }
        outputs.push_back(std::move(outs));
    }
    return std::make_shared<Scenario>(std::move(parties), std::move(inputs), std::move(outputs));
}

Json collection_to_json(const Scenario& s, const InputCollection& coll) {
    coll.validate(s);
    Json j = Json::object();
    for (std::size_t i = 0; i < s.party_count(); ++i) {
        if (coll.party_empty(i)) continue;
        std::vector<std::string> names;
        for (std::size_t x : coll.selected(i)) names.push_back(s.inputs(i)[x]);
        j[s.party(i)] = std::move(names);
    }
    return j;
}

InputCollection collection_from_json(const Scenario& s, const Json& j) {
    std::vector<std::uint32_t> masks(s.party_count(), 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::size_t i = s.party_index(it.key());
        for (const auto& name : it.value())
            masks[i] |= (1u << s.input_index(i, name.get<std::string>()));
    }
    return InputCollection(std::move(masks));
}

Json behaviour_to_json(const Behaviour& wp) {
    const Scenario& s = wp.scenario();
    Json table = Json::object();
    for (std::size_t c = 0; c < s.context_count(); ++c) {
        Json ctx = Json::object();
        for (std::size_t t = 0; t < s.outcome_count(c); ++t)
            ctx[joined(s, c, true, t)] = rat_to_string(wp.prob(c, t));
        table[joined(s, c, false)] = std::move(ctx);
    }
    Json j;
    j["table"] = std::move(table);
    return j;
}

Behaviour behaviour_from_json(std::shared_ptr<const Scenario> s, const Json& j) {
    if (!j.contains("table")) throw ValidationError("behaviour JSON needs a table");
    std::vector<Rat> table(s->d(), Rat(0));
    for (auto ctx_it = j.at("table").begin(); ctx_it != j.at("table").end(); ++ctx_it) {
        const auto input_names = split(ctx_it.key());
        if (input_names.size() != s->party_count())
            throw ValidationError("context key arity mismatch: '" + ctx_it.key() + "'");
        std::vector<std::size_t> joint(s->party_count());
        for (std::size_t i = 0; i < s->party_count(); ++i) joint[i] = s->input_index(i, input_names[i]);
        const std::size_t c = s->context_of(joint);
        for (auto out_it = ctx_it.value().begin(); out_it != ctx_it.value().end(); ++out_it) {
            const auto names = split(out_it.key());
            if (names.size() != s->party_count())
                throw ValidationError("outcome key arity mismatch: '" + out_it.key() + "'");
            std::vector<std::size_t> comps(s->party_count());
            for (std::size_t i = 0; i < s->party_count(); ++i) {
                const auto& outs = s->outputs(i, joint[i]);
                const auto it = std::find(outs.begin(), outs.end(), names[i]);
                if (it == outs.end())
                    throw ValidationError("unknown outcome '" + names[i] + "' in '" + out_it.key() + "'");
                comps[i] = static_cast<std::size_t>(it - outs.begin());
            }
            table[s->coord(c, s->outcome_of(c, comps))] = rat_from_string(out_it.value().get<std::string>());
        }
    }
    return Behaviour(std::move(s), std::move(table));
}

Json vertex_set_to_json(const VertexSet& set) {
    Json j;
    j["scenario"] = scenario_to_json(*set.scenario);
    j["family"] = family_name(set.family);
    if (set.collection) j["collection"] = collection_to_json(*set.scenario, *set.collection);
    j["layout"] = "context-major; contexts and outcome tuples in mixed-radix order, last party fastest";
    Json verts = Json::array();
    for (const auto& v : set.vertices) {
        Json row = Json::array();
        for (const Rat& r : v.table()) row.push_back(rat_to_string(r));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

VertexSet vertex_set_from_json(const Json& j) {
    VertexSet set;
    set.scenario = scenario_from_json(j.at("scenario"));
    const std::string fam = j.at("family").get<std::string>();
    if (fam == "e") set.family = Family::E;
    else if (fam == "bell") set.family = Family::Bell;
    else if (fam == "ns") set.family = Family::NS;
    else if (fam == "pd") set.family = Family::PD;
    else if (fam == "composed") set.family = Family::Composed;
    else throw ValidationError("unknown family '" + fam + "'");
    if (j.contains("collection"))
        set.collection = collection_from_json(*set.scenario, j.at("collection"));
    for (const auto& row : j.at("vertices")) {
        std::vector<Rat> t;
        t.reserve(row.size());
        for (const auto& r : row) t.push_back(rat_from_string(r.get<std::string>()));
        set.vertices.emplace_back(set.scenario, std::move(t));
    }
    canonicalize(set);
    return set;
}

Json functional_to_json(const AffineFunctional& f) {
    Json j;
    Json coeffs = Json::array();
    for (const Rat& r : f.coeffs) coeffs.push_back(rat_to_string(r));
    j["coeffs"] = std::move(coeffs);
    j["bound"] = rat_to_string(f.bound);
    j["sense"] = "<=";
    return j;
}

Json certificate_to_json(const MembershipCertificate& cert) {
    Json j;
    if (is_inside(cert)) {
        j["status"] = "inside";
        Json w = Json::array();
        for (const Rat& r : std::get<InsideCertificate>(cert).weights) w.push_back(rat_to_string(r));
        j["weights"] = std::move(w);
    } else {
        j["status"] = "outside";
        j["separator"] = functional_to_json(std::get<OutsideCertificate>(cert).separator);
    }
    return j;
}

Json hrep_to_json(const HRep& h) {
    Json j;
    j["dim"] = h.dim;
    Json ineq = Json::array();
    for (const auto& f : h.inequalities) ineq.push_back(functional_to_json(f));
    j["inequalities"] = std::move(ineq);
    Json eqs = Json::array();
    for (const auto& e : h.equalities) {
        Json one;
        Json coeffs = Json::array();
        for (const Rat& r : e.coeffs) coeffs.push_back(rat_to_string(r));
        one["coeffs"] = std::move(coeffs);
        one["rhs"] = rat_to_string(e.rhs);
        eqs.push_back(std::move(one));
    }
    j["equalities"] = std::move(eqs);
    return j;
}

Json vrep_to_json(const VRep& v) {
    Json j;
    j["dim"] = v.dim;
    Json pts = Json::array();
    for (const auto& p : v.points) {
        Json row = Json::array();
        for (const Rat& r : p) row.push_back(rat_to_string(r));
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j;
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Equal: return "equal";
        case Relation::Subset: return "subset";
        case Relation::Superset: return "superset";
        case Relation::Incomparable: return "incomparable";
    }
    return "?";
}

Json classification_to_json(const Scenario& s, const ClassificationReport& report) {
    Json classes = Json::array();
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
        const auto& cls = report.classes[k];
        Json entry;
        if (cls.msf.bottom)
            entry["msf"] = "bottom";
        else
            entry["msf"] = collection_to_json(s, cls.msf.fragment);
        entry["size"] = cls.size;
        entry["representative"] = collection_to_json(s, cls.representative);
        Json rels = Json::array();
        for (std::size_t o = 0; o < report.classes.size(); ++o) {
            if (o == k || report.relations[k][o] == Relation::Incomparable) continue;
            Json r;
            r["other"] = o;
            r["rel"] = relation_name(report.relations[k][o]);
            rels.push_back(std::move(r));
        }
        entry["relations"] = std::move(rels);
        classes.push_back(std::move(entry));
    }
    Json j;
    j["classes"] = std::move(classes);
    return j;
}

Json inequality_to_json(const Inequality& iq) {
    Json j = functional_to_json(iq.functional);
    j["tag"] = iq.tag;
    return j;
}

Json inseparability_to_json(const Scenario& s, const InseparabilityReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json one;
        std::vector<std::string> names;
        for (std::size_t i : e.subset) names.push_back(s.party(i));
        one["subset"] = names;
        one["inside"] = e.inside;
        one["certificate"] = certificate_to_json(e.certificate);
        one["subset_inseparability_witnessed"] = !e.inside;
        entries.push_back(std::move(one));
    }
    Json j;
    j["entries"] = std::move(entries);
    j["inside_intersection"] = report.inside_intersection;
    j["inside_union"] = report.inside_union;
    j["inside_hull"] = report.inside_hull;
    j["hull_certificate"] = certificate_to_json(report.hull_certificate);
    j["weak_inseparability_witnessed"] = report.weakly_inseparable();
    j["collection_inseparability_witnessed"] = report.collection_inseparable();
    j["strong_inseparability_witnessed"] = report.strongly_inseparable();
    j["note"] =
        "witnesses are behaviour-level: an outside verdict rules out the matching separable "
        "quantum model; inside verdicts certify nothing about the state";
    return j;
}

Json joint_to_json(const JointDistribution& joint) {
    Json j;
    j["collection"] = collection_to_json(*joint.scenario, joint.coll);
    j["alpha_radices"] = joint.alpha_radices;
    Json tabs = Json::array();
    for (const auto& t : joint.tables) {
        Json row = Json::array();
        for (const Rat& r : t) row.push_back(rat_to_string(r));
        tabs.push_back(std::move(row));
    }
    j["tables"] = std::move(tabs);
    return j;
}

}  // namespace pdp
