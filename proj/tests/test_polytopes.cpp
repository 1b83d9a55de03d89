#include "pdp/applications.hpp"
#include "pdp/polytopes.hpp"

#include <doctest.h>

#include <set>

using namespace pdp;

namespace {

std::shared_ptr<const Scenario> chsh() {
    static auto s = std::make_shared<Scenario>(Scenario::uniform(2, 2, 2));
    return s;
}

std::shared_ptr<const Scenario> tri() {
    static auto s = std::make_shared<Scenario>(Scenario::uniform(3, 2, 2));
    return s;
}

bool subset(const VertexSet& a, const VertexSet& b) {
    for (const auto& v : a.vertices)
        if (!b.contains(v)) return false;
    return true;
}

// Extremality within NS(S): the active constraints (zero coordinates plus the
// equality system) must pin the point uniquely.
bool is_ns_extreme(const Behaviour& v) {
    const HRep h = ns_hrep(v.scenario());
    Mat rows;
    Vec rhs;
    for (const auto& e : h.equalities) {
        rows.push_back(e.coeffs);
        rhs.push_back(e.rhs);
    }
    for (std::size_t k = 0; k < v.table().size(); ++k) {
        if (v.table()[k] != 0) continue;
        Vec e(v.table().size(), Rat(0));
        e[k] = 1;
        rows.push_back(std::move(e));
        rhs.push_back(Rat(0));
    }
    const auto sol = solve_affine(rows, rhs);
    return sol && sol->nullspace.empty();
}

}  // namespace

TEST_CASE("e vertices") {
    CHECK(e_vertices(chsh()).vertices.size() == 256);
    auto point = std::make_shared<Scenario>(Scenario({"A"}, {{"x"}}, {{{"a", "b", "c", "d"}}}));
    CHECK(e_vertices(point).vertices.size() == 4);
    auto pair = std::make_shared<Scenario>(Scenario::uniform(2, 1, 2));
    CHECK(e_vertices(pair).vertices.size() == 4);  // one context, four outcomes
    for (const auto& v : e_vertices(chsh()).vertices) CHECK(is_predictable(v));
    PolytopeBudget tiny;
    tiny.max_vertices = 10;
    CHECK_THROWS_AS(e_vertices(chsh(), tiny), BudgetExceeded);
}

TEST_CASE("bell vertices") {
    CHECK(bell_vertices(chsh()).vertices.size() == 16);
    CHECK(bell_vertices(tri()).vertices.size() == 64);
    auto single = std::make_shared<Scenario>(Scenario::uniform(1, 2, 2));
    CHECK(bell_vertices(single).vertices.size() == 4);
    for (const auto& v : bell_vertices(chsh()).vertices) {
        CHECK(is_predictable(v));
        CHECK(is_uncorrelated(v));
        CHECK(is_no_signalling(v));
    }
}

TEST_CASE("ns vertices") {
    SUBCASE("CHSH: 16 deterministic + 8 PR") {
        const auto ns = ns_vertices(chsh());
        CHECK(ns.vertices.size() == 24);
        CHECK(subset(bell_vertices(chsh()), ns));
        std::vector<Behaviour> nonlocal;
        for (const auto& v : ns.vertices)
            if (!is_predictable(v)) nonlocal.push_back(v);
        CHECK(nonlocal.size() == 8);
        const auto orbit = relabeling_orbit(pr_box(chsh()));
        CHECK(nonlocal == orbit);
    }
    SUBCASE("at most one multi-input party collapses to Bell") {
        const Scenario s13({"A", "B"}, {{"x"}, {"y1", "y2", "y3"}},
                           {{{"0", "1"}}, {{"0", "1"}, {"0", "1"}, {"0", "1"}}});
        const auto shared = std::make_shared<Scenario>(s13);
        const auto ns = ns_vertices(shared);
        CHECK(ns.vertices == bell_vertices(shared).vertices);
    }
    SUBCASE("single-input party splits off deterministically") {
        const Scenario s({"A", "B", "C"},
                         {{"x"}, {"y1", "y2"}, {"z1", "z2"}},
                         {{{"0", "1"}},
                          {{"0", "1"}, {"0", "1"}},
                          {{"0", "1"}, {"0", "1"}}});
        const auto shared = std::make_shared<Scenario>(s);
        const auto ns = ns_vertices(shared);
        CHECK(ns.vertices.size() == 48);  // 2 x 24
        // Independent route: enumerate the H-representation directly.
        const auto direct = vertices_from_hrep(ns_hrep(s));
        CHECK(direct.points.size() == 48);
        std::vector<Vec> got;
        for (const auto& v : ns.vertices) got.push_back(v.table());
        CHECK(got == direct.points);
    }
    SUBCASE("bipartite (2,3) binary golden value") {
        const Scenario s({"A", "B"}, {{"x1", "x2"}, {"y1", "y2", "y3"}},
                         {{{"0", "1"}, {"0", "1"}},
                          {{"0", "1"}, {"0", "1"}, {"0", "1"}}});
        const auto shared = std::make_shared<Scenario>(s);
        const auto ns = ns_vertices(shared);
        CHECK(ns.vertices.size() == 128);  // 32 deterministic + 96 PR-type lifts
        std::size_t deterministic = 0;
        for (const auto& v : ns.vertices) {
            CHECK(is_no_signalling(v));
            CHECK(is_ns_extreme(v));
            if (is_predictable(v)) ++deterministic;
        }
        CHECK(deterministic == 32);
    }
}

TEST_CASE("pd vertices") {
    SUBCASE("redundant collections") {
        auto s = chsh();
        CHECK(pd_vertices(s, InputCollection::full(*s)).vertices == bell_vertices(s).vertices);
        CHECK(pd_vertices(s, InputCollection::empty(*s)).vertices == ns_vertices(s).vertices);
    }
    SUBCASE("tripartite party block: 4 x 24 products, no collisions") {
        const auto pd = pd_vertices(tri(), InputCollection::party_block(*tri(), {0}));
        CHECK(pd.vertices.size() == 96);
        for (const auto& v : pd.vertices) {
            CHECK(is_partially_predictable(v, InputCollection::party_block(*tri(), {0})));
            CHECK(is_no_signalling(v));
        }
    }
    SUBCASE("extreme point chain bell <= pd <= ns") {
        auto s = chsh();
        const auto bell = bell_vertices(s);
        const auto ns = ns_vertices(s);
        all_collections(*s, true, [&](const InputCollection& coll) {
            const auto pd = pd_vertices(s, coll);
            CHECK(subset(bell, pd));
            CHECK(subset(pd, ns));
            CHECK(affine_rank(pd.vrep()) == 8);
            // pd = the partially predictable NS vertices (independent route)
            std::vector<Behaviour> filtered;
            for (const auto& v : ns.vertices)
                if (is_partially_predictable(v, coll)) filtered.push_back(v);
            CHECK(filtered == pd.vertices);
        });
    }
    SUBCASE("monotone containment") {
        auto s = chsh();
        all_collections(*s, true, [&](const InputCollection& coll) {
            all_collections(*s, true, [&](const InputCollection& sub) {
                if (!sub.subset_of(coll)) return;
                CHECK(subset(pd_vertices(s, coll), pd_vertices(s, sub)));
            });
        });
    }
}

TEST_CASE("restriction maps the NS polytope onto the subscenario NS polytope") {
    auto s = chsh();
    const auto ns = ns_vertices(s);
    all_collections(*s, false, [&](const InputCollection& coll) {
        auto sub = std::make_shared<Scenario>(restrict_scenario(*s, coll));
        VertexSet image;
        image.scenario = sub;
        image.family = Family::Composed;
        for (const auto& v : ns.vertices) image.vertices.push_back(restrict_behaviour(v, coll));
        canonicalize(image);
        const auto sub_ns = ns_vertices(sub);
        // conv(image) = NS(sub): the sub-NS vertices all appear, and every
        // image point stays inside the sub-NS polytope.
        for (const auto& v : sub_ns.vertices) CHECK(image.contains(v));
        for (const auto& v : image.vertices) CHECK(is_inside(membership(v, sub_ns)));
    });
}

TEST_CASE("dimension formula agrees with the computed affine hulls") {
    // Geometry route (affine rank of vertex sets) vs the closed-form count.
    const std::vector<Scenario> fixtures{
        Scenario::uniform(2, 2, 2),
        Scenario({"A", "B"}, {{"x1", "x2"}, {"y1", "y2", "y3"}},
                 {{{"0", "1"}, {"0", "1"}}, {{"0", "1"}, {"0", "1"}, {"0", "1"}}}),
        Scenario({"A", "B"}, {{"x"}, {"y1", "y2"}},
                 {{{"0", "1", "2"}}, {{"0", "1"}, {"0", "1", "2"}}})};  // ragged
    for (const auto& sc : fixtures) {
        auto s = std::make_shared<Scenario>(sc);
        const auto d = s->pironio_dimension();
        CHECK(Int(affine_rank(bell_vertices(s).vrep())) == d);
        CHECK(Int(affine_rank(ns_vertices(s).vrep())) == d);
    }
}

TEST_CASE("membership over families") {
    auto s = chsh();
    const Behaviour pr = pr_box(s);
    SUBCASE("PR box is an NS vertex") {
        const auto cert = membership(pr, ns_vertices(s));
        REQUIRE(is_inside(cert));
        const auto& w = std::get<InsideCertificate>(cert).weights;
        CHECK(std::count(w.begin(), w.end(), Rat(1)) == 1);
    }
    SUBCASE("PR box is outside every PD except NS") {
        all_collections(*s, true, [&](const InputCollection& coll) {
            const bool inside = is_inside(membership(pr, pd_vertices(s, coll)));
            CHECK(inside == coll.is_empty());
        });
    }
    SUBCASE("partial PR box against PD(S, M^{A}) with a Sliwa-type separator") {
        const auto pd_a = pd_vertices(tri(), InputCollection::party_block(*tri(), {0}));
        const Behaviour wb = partial_pr_box(tri(), 1);
        const auto cert = membership(wb, pd_a);
        REQUIRE(!is_inside(cert));
        const auto& sep = std::get<OutsideCertificate>(cert).separator;
        CHECK(sep.evaluate(wb.table()) > sep.bound);
        for (const auto& v : pd_a.vertices) CHECK(sep.evaluate(v.table()) <= sep.bound);
    }
    SUBCASE("merged unions are accepted") {
        const auto a = pd_vertices(s, InputCollection({0b01u, 0u}));
        const auto b = pd_vertices(s, InputCollection({0u, 0b01u}));
        const auto u = merge({&a, &b});
        CHECK(is_inside(membership(bell_vertices(s).vertices[3], u)));
    }
}
