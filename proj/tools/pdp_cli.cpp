// Command line front end: scenario info, vertex enumeration, membership
// certificates, classification reports, and end-to-end demos.
#include "pdp/applications.hpp"
#include "pdp/classify.hpp"
#include "pdp/fine.hpp"
#include "pdp/json_io.hpp"
#include "pdp/polytopes.hpp"
#include "pdp/product.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace pdp;

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        Json j;
        in >> j;
        return j;
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
}

struct Options {
    std::string scenario_file;
    std::string collection_file;
    std::string behaviour_file;
    std::string vertices_file;
    std::string family = "bell";
    std::string demo;
    std::size_t budget = 2'000'000;
    int threads = 0;
    bool pretty = false;
    bool decimal = false;
};

// Renders "p/q" strings as decimal approximations, for human consumption.
Json decimalized(const Json& j) {
    if (j.is_object()) {
        Json out = Json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = decimalized(it.value());
        return out;
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& v : j) out.push_back(decimalized(v));
        return out;
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-')) {
            try {
                const Rat r = rat_from_string(s);
                std::ostringstream os;
                os << r.convert_to<double>();
                return Json(os.str());
            } catch (const ValidationError&) {
            }
        }
    }
    return j;
}

const Options* current_options = nullptr;

void emit(const Json& j, bool pretty) {
    const Json& out = (current_options && current_options->decimal) ? decimalized(j) : j;
    if (pretty)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << out.dump() << "\n";
}

PolytopeBudget make_budget(const Options& opt) {
    PolytopeBudget b;
    b.max_vertices = opt.budget;
    b.enumeration.max_rays = opt.budget;
    b.enumeration.threads = opt.threads;
    return b;
}

VertexSet family_vertices(const Options& opt, const std::shared_ptr<const Scenario>& s) {
    const PolytopeBudget budget = make_budget(opt);
    if (opt.family == "e") return e_vertices(s, budget);
    if (opt.family == "bell") return bell_vertices(s, budget);
    if (opt.family == "ns") return ns_vertices(s, budget);
    if (opt.family == "pd") {
        if (opt.collection_file.empty())
            throw ValidationError("--family pd needs --collection");
        return pd_vertices(s, collection_from_json(*s, load_json(opt.collection_file)), budget);
    }
    throw ValidationError("unknown family '" + opt.family + "' (use e|bell|ns|pd)");
}

int run_scenario(const Options& opt) {
    auto s = scenario_from_json(load_json(opt.scenario_file));
    Json j;
    j["parties"] = s->party_count();
    j["contexts"] = s->context_count();
    j["d"] = s->d();
    j["full_dimension"] = s->full_dimension();
    j["pironio_dimension"] = s->pironio_dimension().convert_to<std::uint64_t>();
    j["nontrivial"] = s->nontrivial();
    emit(j, opt.pretty);
    return 0;
}

int run_vertices(const Options& opt) {
    auto s = scenario_from_json(load_json(opt.scenario_file));
    emit(vertex_set_to_json(family_vertices(opt, s)), opt.pretty);
    return 0;
}

int run_member(const Options& opt) {
    auto s = scenario_from_json(load_json(opt.scenario_file));
    const Behaviour wp = behaviour_from_json(s, load_json(opt.behaviour_file));
    VertexSet set = opt.vertices_file.empty() ? family_vertices(opt, s)
                                              : vertex_set_from_json(load_json(opt.vertices_file));
    emit(certificate_to_json(membership(wp, set)), opt.pretty);
    return 0;
}

int run_classify(const Options& opt) {
    auto s = scenario_from_json(load_json(opt.scenario_file));
    emit(classification_to_json(*s, classify_all(*s, opt.budget)), opt.pretty);
    return 0;
}

int check(bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
    return ok ? 0 : 1;
}

int demo_fig4() {
    auto s = std::make_shared<Scenario>(Scenario::uniform(2, 3, 2));
    const auto report = classify_all(*s);
    int bad = 0;
    bad += check(report.classes.size() == 17, "bipartite three-input scenario: 17 classes");
    std::size_t bell = 0, ns = 0, singles = 0;
    for (const auto& c : report.classes) {
        if (c.msf.bottom) bell = c.size;
        else if (c.msf.fragment == complement(*s, InputCollection::empty(*s))) ns = c.size;
        else ++singles;
    }
    bad += check(bell == 48, "Bell class has 48 elements");
    bad += check(ns == 1, "NS class has one element");
    bad += check(singles == 15, "6 one-input + 9 two-input classes");
    return bad;
}

int demo_fig5() {
    auto s = std::make_shared<Scenario>(Scenario::uniform(3, 2, 2));
    const auto report = classify_all(*s);
    int bad = 0;
    bad += check(report.classes.size() == 5, "tripartite binary-input scenario: 5 classes");
    for (const auto& c : report.classes) {
        if (c.msf.bottom)
            bad += check(c.size == 54, "Bell class has 54 elements");
        else if (c.msf.fragment == complement(*s, InputCollection::empty(*s)))
            bad += check(c.size == 1, "NS class has one element");
        else
            bad += check(c.size == 3, "party class has three elements");
    }
    return bad;
}

int demo_sliwa() {
    auto s = std::make_shared<Scenario>(Scenario::uniform(3, 2, 2));
    const std::vector<Inequality> sliwa{build_inequality(s, InequalityFamily::Sliwa3A),
                                        build_inequality(s, InequalityFamily::Sliwa3B),
                                        build_inequality(s, InequalityFamily::Sliwa3C)};
    std::vector<Behaviour> boxes;
    for (std::size_t k = 0; k < 3; ++k) boxes.push_back(partial_pr_box(s, k));
    int bad = 0;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j) {
            const Rat v = evaluate(sliwa[j], boxes[k]);
            bad += check(v == (j == k ? Rat(2) : Rat(4)),
                         "Sliwa 3" + std::string(1, char('A' + j)) + " on partial PR box " +
                             std::string(1, char('A' + k)) + " = " + rat_to_string(v));
        }
    const Behaviour third = mix(std::vector<std::pair<Rat, Behaviour>>{
        {Rat(1, 3), boxes[0]}, {Rat(1, 3), boxes[1]}, {Rat(1, 3), boxes[2]}});
    const auto report = inseparability_report(third, {{0}, {1}, {2}});
    for (std::size_t j = 0; j < 3; ++j) {
        const Rat v = evaluate(sliwa[j], third);
        bad += check(v == Rat(10, 3),
                     "1/3 mixture reaches (2+4+4)/3 = 10/3 on Sliwa 3" + std::string(1, char('A' + j)) +
                         " (the text's '8/3' miscomputes this sum)");
    }
    bad += check(report.collection_inseparable(), "1/3 mixture certified outside every PD(S,M^{k})");
    bad += check(report.inside_hull,
                 "1/3 mixture inside conv(NS2) by construction: the union is not convex");
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = k + 1; j < 3; ++j) {
            const Behaviour pair = mix(std::vector<std::pair<Rat, Behaviour>>{
                {Rat(1, 2), boxes[k]}, {Rat(1, 2), boxes[j]}});
            bad += check(evaluate(sliwa[k], pair) == 3 && evaluate(sliwa[j], pair) == 3,
                         "1/2 pair mixture reaches 3 on both matching inequalities");
        }
    return bad;
}

int demo_fine() {
    int bad = 0;
    // One-multi-party construction on a (1,3)-input scenario.
    std::vector<std::string> parties{"A", "B"};
    std::vector<std::vector<std::string>> inputs{{"x1"}, {"y1", "y2", "y3"}};
    std::vector<std::vector<std::vector<std::string>>> outputs{
        {{"0", "1"}}, {{"0", "1"}, {"0", "1"}, {"0", "1"}}};
    auto s13 = std::make_shared<Scenario>(parties, inputs, outputs);
    const auto bell13 = bell_vertices(s13);
    std::vector<std::pair<Rat, Behaviour>> terms;
    Rat left(1);
    for (std::size_t k = 0; k < 5; ++k) {
        const Rat w = (k + 1 == 5) ? left : Rat(1, 1 << (k + 1));
        terms.emplace_back(w, bell13.vertices[(3 * k + 1) % bell13.vertices.size()]);
        left -= w;
    }
    const Behaviour wp = mix(terms);
    bad += check(verify_joint(fine_joint_one_multi_party(wp), wp),
                 "one-multi-party Fine joint recovers the behaviour");

    // Certificate -> model -> joint round trip on the CHSH scenario.
    auto chsh = std::make_shared<Scenario>(Scenario::uniform(2, 2, 2));
    const auto pd = pd_vertices(chsh, InputCollection::full(*chsh));
    const Behaviour uniform = Behaviour::uniform(chsh);
    const auto cert = membership(uniform, pd);
    bad += check(is_inside(cert), "uniform behaviour admits an LHV model");
    const auto model = model_from_certificate(uniform, cert, pd);
    bad += check(verify_joint(partial_joint_from_model(model), uniform),
                 "model -> joint -> marginals closes exactly");
    return bad;
}

int demo_broadcast() {
    auto s = std::make_shared<Scenario>(Scenario::uniform(3, 2, 2));
    int bad = 0;
    const auto bl = broadcast_local_vertices(s, {0}, {{1, 2}});
    const auto pd = pd_vertices(s, InputCollection::party_block(*s, {0}));
    bad += check(bl.vertices == pd.vertices,
                 "basic broadcast scenario: BL(S_B) = PD(S, M^{I_L})");
    // No receiver, two blocks: restriction to a cross-block pair is Bell-local.
    const auto gb = broadcast_local_vertices(s, {}, {{0}, {1, 2}});
    const InputCollection pair = InputCollection::party_block(*s, {0, 1});
    auto pair_s = std::make_shared<Scenario>(restrict_scenario(*s, pair));
    VertexSet image;
    image.scenario = pair_s;
    image.family = Family::Composed;
    for (const auto& v : gb.vertices) image.vertices.push_back(restrict_behaviour(v, pair));
    canonicalize(image);
    const auto pair_bell = bell_vertices(pair_s);
    bool hull_is_bell = true;
    for (const auto& b : pair_bell.vertices) hull_is_bell = hull_is_bell && image.contains(b);
    for (const auto& v : image.vertices)
        hull_is_bell = hull_is_bell && is_inside(membership(v, pair_bell));
    bad += check(hull_is_bell,
                 "general broadcast: cross-block restriction collapses to the Bell polytope");
    return bad;
}

int demo_lf() {
    auto s = std::make_shared<Scenario>(Scenario::uniform(2, 3, 2));
    int bad = 0;
    const auto [base1, coll1] = sequential_to_pd(SequentialScenario{s, {1, 1}});
    bad += check(!is_bell(*base1, coll1) && !is_ns(*base1, coll1),
                 "one query per side: the LF polytope is neither Bell nor NS");
    const auto [base2, coll2] = sequential_to_pd(SequentialScenario{s, {2, 2}});
    bad += check(is_bell(*base2, coll2), "two queries per side: the LF polytope is the Bell polytope");
    const auto [base0, coll0] = sequential_to_pd(SequentialScenario{s, {0, 0}});
    bad += check(is_ns(*base0, coll0), "no friends: the LF polytope is the NS polytope");
    return bad;
}

int run_demo(const Options& opt) {
    int bad = 0;
    if (opt.demo == "fig4") bad = demo_fig4();
    else if (opt.demo == "fig5") bad = demo_fig5();
    else if (opt.demo == "sliwa") bad = demo_sliwa();
    else if (opt.demo == "fine") bad = demo_fine();
    else if (opt.demo == "broadcast") bad = demo_broadcast();
    else if (opt.demo == "lf") bad = demo_lf();
    else throw ValidationError("unknown demo '" + opt.demo + "' (fig4|fig5|sliwa|fine|broadcast|lf)");
    std::cout << (bad == 0 ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partially deterministic polytopes over finite correlation scenarios"};
    app.require_subcommand(1);
    Options opt;
    bool compact = false;
    app.add_flag("--pretty", opt.pretty, "indent JSON output");
    app.add_flag("--json", compact, "compact JSON output (the default)");
    app.add_flag("--decimal", opt.decimal,
                 "render rationals as decimal approximations (human readable, not exact)");
    app.add_option("--budget", opt.budget, "vertex / ray budget for enumerations");
    app.add_option("--threads", opt.threads, "worker threads (0 = auto, 1 = sequential)");

    auto* sc = app.add_subcommand("scenario", "print dimensions d, D-tilde, D and nontriviality");
    sc->fallthrough();
    sc->add_option("--scenario", opt.scenario_file, "scenario JSON file")->required();

    auto* vx = app.add_subcommand("vertices", "emit a vertex set as JSON");
    vx->fallthrough();
    vx->add_option("--scenario", opt.scenario_file)->required();
    vx->add_option("--family", opt.family, "e|bell|ns|pd");
    vx->add_option("--collection", opt.collection_file, "input collection JSON (for pd)");

    auto* mb = app.add_subcommand("member", "emit a membership certificate as JSON");
    mb->fallthrough();
    mb->add_option("--scenario", opt.scenario_file)->required();
    mb->add_option("--behaviour", opt.behaviour_file)->required();
    mb->add_option("--family", opt.family, "e|bell|ns|pd");
    mb->add_option("--collection", opt.collection_file);
    mb->add_option("--vertices", opt.vertices_file, "explicit vertex-set JSON instead of a family");

    auto* cl = app.add_subcommand("classify", "emit the classification report as JSON");
    cl->fallthrough();
    cl->add_option("--scenario", opt.scenario_file)->required();

    auto* dm = app.add_subcommand("demo", "run a named end-to-end reproduction");
    dm->fallthrough();
    dm->add_option("--name", opt.demo, "fig4|fig5|sliwa|fine|broadcast|lf")->required();

    CLI11_PARSE(app, argc, argv);
    if (compact) opt.pretty = false;
    current_options = &opt;

    try {
        if (sc->parsed()) return run_scenario(opt);
        if (vx->parsed()) return run_vertices(opt);
        if (mb->parsed()) return run_member(opt);
        if (cl->parsed()) return run_classify(opt);
        if (dm->parsed()) return run_demo(opt);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
