#include "pdp/applications.hpp"
#include "pdp/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace pdp;

TEST_CASE("rational strings") {
    CHECK(rat_to_string(Rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
    CHECK(rat_to_string(Rat(4)) == "4");
    CHECK(rat_from_string("7/21") == Rat(1, 3));
    CHECK(rat_from_string("-5") == Rat(-5));
    CHECK_THROWS_AS(rat_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rat_from_string("a/b"), ValidationError);
    CHECK_THROWS_AS(rat_from_string(""), ValidationError);
}

TEST_CASE("scenario round trip") {
    const Scenario ragged({"A", "B"}, {{"x"}, {"y1", "y2"}},
                          {{{"a", "b", "c"}}, {{"0", "1"}, {"p", "q", "r"}}});
    const auto back = scenario_from_json(scenario_to_json(ragged));
    CHECK(*back == ragged);
    CHECK_THROWS_AS(scenario_from_json(Json::object()), ValidationError);
}

TEST_CASE("collection round trip with omitted parties") {
    auto s = std::make_shared<Scenario>(Scenario::uniform(3, 2, 2));
    const InputCollection coll({0b01u, 0u, 0b11u});
    const Json j = collection_to_json(*s, coll);
    CHECK(!j.contains("P2"));
    CHECK(collection_from_json(*s, j) == coll);
    CHECK(collection_from_json(*s, Json::object()).is_empty());
    CHECK_THROWS_AS(collection_from_json(*s, Json{{"nope", Json::array({"x1"})}}), ValidationError);
}

TEST_CASE("behaviour round trip") {
    auto s = std::make_shared<Scenario>(Scenario::uniform(2, 2, 2));
    std::mt19937_64 rng(5);
    const auto bell = bell_vertices(s);
    std::vector<std::pair<Rat, Behaviour>> parts;
    parts.emplace_back(Rat(1, 7), bell.vertices[rng() % 16]);
    parts.emplace_back(Rat(2, 7), bell.vertices[rng() % 16]);
    parts.emplace_back(Rat(4, 7), pr_box(s));
    const Behaviour wp = mix(parts);
    CHECK(behaviour_from_json(s, behaviour_to_json(wp)) == wp);
}

TEST_CASE("vertex set round trip") {
    auto s = std::make_shared<Scenario>(Scenario::uniform(2, 2, 2));
    const auto ns = ns_vertices(s);
    const auto back = vertex_set_from_json(vertex_set_to_json(ns));
    CHECK(back.family == Family::NS);
    CHECK(back.vertices.size() == ns.vertices.size());
    for (std::size_t k = 0; k < ns.vertices.size(); ++k)
        CHECK(back.vertices[k].table() == ns.vertices[k].table());
}

TEST_CASE("certificates and reports serialize") {
    auto s = std::make_shared<Scenario>(Scenario::uniform(2, 2, 2));
    const auto bell = bell_vertices(s);
    const Json inside = certificate_to_json(membership(Behaviour::uniform(s), bell));
    CHECK(inside.at("status") == "inside");
    const Json outside = certificate_to_json(membership(pr_box(s), bell));
    CHECK(outside.at("status") == "outside");
    CHECK(outside.contains("separator"));

    const Json report = classification_to_json(*s, classify_all(*s));
    CHECK(report.at("classes").size() == 2);

    const Json iq = inequality_to_json(build_inequality(s, InequalityFamily::CHSH));
    CHECK(iq.at("tag") == "CHSH");
    CHECK(iq.at("bound") == "2");
}
