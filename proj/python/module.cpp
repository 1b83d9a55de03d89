// Python bindings: thin JSON-string wrappers over the core operations.
#include "pdp/applications.hpp"
#include "pdp/classify.hpp"
#include "pdp/fine.hpp"
#include "pdp/json_io.hpp"
#include "pdp/polytopes.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pdp;

namespace {

std::shared_ptr<const Scenario> parse_scenario(const std::string& scenario_json) {
    return scenario_from_json(Json::parse(scenario_json));
}

PolytopeBudget budget_of(std::size_t budget, int threads) {
    PolytopeBudget b;
    b.max_vertices = budget;
    b.enumeration.max_rays = budget;
    b.enumeration.threads = threads;
    return b;
}

VertexSet vertices_for(const std::shared_ptr<const Scenario>& s, const std::string& family,
                       const std::string& collection_json, std::size_t budget, int threads) {
    const PolytopeBudget b = budget_of(budget, threads);
    if (family == "e") return e_vertices(s, b);
    if (family == "bell") return bell_vertices(s, b);
    if (family == "ns") return ns_vertices(s, b);
    if (family == "pd")
        return pd_vertices(s, collection_from_json(*s, Json::parse(collection_json)), b);
    throw ValidationError("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_pdpoly, m) {
    m.doc() = "exact partially deterministic polytopes over finite correlation scenarios";

    py::register_exception<ValidationError>(m, "ScenarioValidationError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);

    m.def("uniform_scenario", [](std::size_t parties, std::size_t inputs, std::size_t outputs) {
        return scenario_to_json(Scenario::uniform(parties, inputs, outputs)).dump();
    }, py::arg("parties"), py::arg("inputs"), py::arg("outputs"));

    m.def("scenario_info", [](const std::string& scenario) {
        auto s = parse_scenario(scenario);
        Json j;
        j["d"] = s->d();
        j["full_dimension"] = s->full_dimension();
        j["pironio_dimension"] = s->pironio_dimension().convert_to<std::uint64_t>();
        j["nontrivial"] = s->nontrivial();
        return j.dump();
    }, py::arg("scenario"));

    m.def("vertices", [](const std::string& scenario, const std::string& family,
                         const std::string& collection, std::size_t budget, int threads) {
        return vertex_set_to_json(
                   vertices_for(parse_scenario(scenario), family, collection, budget, threads))
            .dump();
    }, py::arg("scenario"), py::arg("family"), py::arg("collection") = "{}",
       py::arg("budget") = 2'000'000, py::arg("threads") = 0);

    m.def("membership", [](const std::string& scenario, const std::string& behaviour,
                           const std::string& family, const std::string& collection,
                           std::size_t budget, int threads) {
        auto s = parse_scenario(scenario);
        const Behaviour wp = behaviour_from_json(s, Json::parse(behaviour));
        const auto set = vertices_for(s, family, collection, budget, threads);
        return certificate_to_json(membership(wp, set)).dump();
    }, py::arg("scenario"), py::arg("behaviour"), py::arg("family"),
       py::arg("collection") = "{}", py::arg("budget") = 2'000'000, py::arg("threads") = 0);

    m.def("classify", [](const std::string& scenario) {
        auto s = parse_scenario(scenario);
        return classification_to_json(*s, classify_all(*s)).dump();
    }, py::arg("scenario"));

    m.def("compare_collections", [](const std::string& scenario, const std::string& a,
                                    const std::string& b) {
        auto s = parse_scenario(scenario);
        return relation_name(compare(*s, collection_from_json(*s, Json::parse(a)),
                                     collection_from_json(*s, Json::parse(b))));
    }, py::arg("scenario"), py::arg("a"), py::arg("b"));

    m.def("pr_box", [](const std::string& scenario) {
        return behaviour_to_json(pr_box(parse_scenario(scenario))).dump();
    }, py::arg("scenario"));

    m.def("partial_pr_box", [](const std::string& scenario, std::size_t party) {
        return behaviour_to_json(partial_pr_box(parse_scenario(scenario), party)).dump();
    }, py::arg("scenario"), py::arg("party"));

    m.def("evaluate_inequality", [](const std::string& scenario, const std::string& family,
                                    const std::string& behaviour) {
        auto s = parse_scenario(scenario);
        InequalityFamily f;
        if (family == "chsh") f = InequalityFamily::CHSH;
        else if (family == "ch") f = InequalityFamily::CH;
        else if (family == "sliwa3a") f = InequalityFamily::Sliwa3A;
        else if (family == "sliwa3b") f = InequalityFamily::Sliwa3B;
        else if (family == "sliwa3c") f = InequalityFamily::Sliwa3C;
        else throw ValidationError("unknown inequality family '" + family + "'");
        return rat_to_string(
            evaluate(build_inequality(s, f), behaviour_from_json(s, Json::parse(behaviour))));
    }, py::arg("scenario"), py::arg("family"), py::arg("behaviour"));

    m.def("sequential_to_pd", [](const std::string& scenario, const std::vector<std::size_t>& queries) {
        auto s = parse_scenario(scenario);
        const auto [base, coll] = sequential_to_pd(SequentialScenario{s, queries});
        Json j;
        j["collection"] = collection_to_json(*base, coll);
        j["is_bell"] = is_bell(*base, coll);
        j["is_ns"] = is_ns(*base, coll);
        return j.dump();
    }, py::arg("scenario"), py::arg("queries"));

    m.def("fine_round_trip", [](const std::string& scenario, const std::string& behaviour) {
        auto s = parse_scenario(scenario);
        const Behaviour wp = behaviour_from_json(s, Json::parse(behaviour));
        return verify_joint(fine_joint_one_multi_party(wp), wp);
    }, py::arg("scenario"), py::arg("behaviour"));

    m.def("inseparability_report",
          [](const std::string& scenario, const std::string& behaviour,
             const std::vector<std::vector<std::size_t>>& subsets) {
              auto s = parse_scenario(scenario);
              const Behaviour wp = behaviour_from_json(s, Json::parse(behaviour));
              return inseparability_to_json(*s, inseparability_report(wp, subsets)).dump();
          }, py::arg("scenario"), py::arg("behaviour"), py::arg("subsets"));
}
