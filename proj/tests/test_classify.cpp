#include "pdp/classify.hpp"
#include "pdp/polytopes.hpp"

#include <doctest.h>

using namespace pdp;

namespace {

std::shared_ptr<const Scenario> chsh() {
    static auto s = std::make_shared<Scenario>(Scenario::uniform(2, 2, 2));
    return s;
}

}  // namespace

TEST_CASE("maximal solid fragments") {
    const Scenario b3 = Scenario::uniform(2, 3, 2);
    SUBCASE("full collection is Bottom") { CHECK(msf(b3, InputCollection::full(b3)).bottom); }
    SUBCASE("single deterministic input leaves a (2,3) fragment") {
        const auto d = msf(b3, InputCollection({0b001u, 0u}));
        REQUIRE(!d.bottom);
        CHECK(d.fragment.count(0) == 2);
        CHECK(d.fragment.count(1) == 3);
    }
    SUBCASE("tripartite party block leaves the other two parties") {
        const Scenario tri = Scenario::uniform(3, 2, 2);
        const auto d = msf(tri, InputCollection::party_block(tri, {0}));
        REQUIRE(!d.bottom);
        CHECK(d.fragment.party_empty(0));
        CHECK(d.fragment.count(1) == 2);
        CHECK(d.fragment.count(2) == 2);
    }
}

TEST_CASE("compare") {
    const Scenario tri = Scenario::uniform(3, 2, 2);
    SUBCASE("one input of A vs all of A: same class") {
        CHECK(compare(tri, InputCollection({0b01u, 0u, 0u}), InputCollection::party_block(tri, {0})) ==
              Relation::Equal);
    }
    SUBCASE("bipartite: one-det-input polytope strictly contains compatible two-det") {
        const Scenario b3 = Scenario::uniform(2, 3, 2);
        const InputCollection one({0b001u, 0u});
        const InputCollection two({0b001u, 0b001u});
        CHECK(compare(b3, one, two) == Relation::Superset);
        CHECK(compare(b3, two, one) == Relation::Subset);
        const InputCollection other({0b010u, 0u});
        CHECK(compare(b3, one, other) == Relation::Incomparable);
    }
    SUBCASE("rich-complement condition collapses to Bell") {
        const Scenario b3 = Scenario::uniform(2, 3, 2);
        const InputCollection almost({0b011u, 0b111u});  // complements of size 1 and 0
        CHECK(compare(b3, almost, InputCollection::full(b3)) == Relation::Equal);
        CHECK(is_bell(b3, almost));
    }
}

TEST_CASE("is_bell / is_ns") {
    const Scenario tri = Scenario::uniform(3, 2, 2);
    CHECK(is_ns(tri, InputCollection::empty(tri)));
    CHECK(!is_bell(tri, InputCollection::empty(tri)));
    CHECK(is_bell(tri, InputCollection::full(tri)));
    const InputCollection xa1({0b01u, 0u, 0u});
    CHECK(!is_bell(tri, xa1));
    CHECK(!is_ns(tri, xa1));

    const Scenario b3 = Scenario::uniform(2, 3, 2);
    CHECK(is_bell(b3, InputCollection({0b011u, 0u})));  // two deterministic inputs one side

    // Scenario with a single-input party: NS(S) is itself a nontrivial PD.
    const Scenario s({"A", "B", "C"},
                     {{"x"}, {"y1", "y2"}, {"z1", "z2"}},
                     {{{"0", "1"}}, {{"0", "1"}, {"0", "1"}}, {{"0", "1"}, {"0", "1"}}});
    CHECK(is_ns(s, InputCollection::empty(s)));
    CHECK(is_ns(s, InputCollection::party_block(s, {0})));  // deterministic single-input party
}

TEST_CASE("classification reports") {
    SUBCASE("bipartite three-input: 17 classes, Bell class of 48") {
        const Scenario b3 = Scenario::uniform(2, 3, 2);
        const auto report = classify_all(b3);
        CHECK(report.classes.size() == 17);
        std::size_t total = 0;
        std::size_t one_det = 0, two_det = 0;
        for (const auto& c : report.classes) {
            total += c.size;
            if (c.msf.bottom) {
                CHECK(c.size == 48);
                CHECK(c.representative.is_full(b3));
            } else if (c.msf.fragment == InputCollection::full(b3)) {
                CHECK(c.size == 1);  // the NS polytope class
            } else {
                CHECK(c.size == 1);
                const std::size_t frag = c.msf.fragment.count(0) + c.msf.fragment.count(1);
                if (frag == 5) ++one_det;   // (2,3) fragment
                else if (frag == 4) ++two_det;  // (2,2) fragment
            }
        }
        CHECK(total == 64);
        CHECK(one_det == 6);
        CHECK(two_det == 9);
        // Fig. 4 Hasse relations: each two-det class sits strictly inside
        // exactly two one-det classes (plus the NS class).
        for (std::size_t i = 0; i < report.classes.size(); ++i) {
            const auto& ci = report.classes[i];
            if (ci.msf.bottom || ci.msf.fragment == InputCollection::full(b3)) continue;
            const bool is_two = ci.msf.fragment.count(0) + ci.msf.fragment.count(1) == 4;
            if (!is_two) continue;
            std::size_t supersets = 0;
            for (std::size_t j = 0; j < report.classes.size(); ++j) {
                if (j == i || report.classes[j].msf.bottom) continue;
                if (report.classes[j].msf.fragment == InputCollection::full(b3)) continue;
                if (report.relations[i][j] == Relation::Subset) ++supersets;
            }
            CHECK(supersets == 2);
        }
    }
    SUBCASE("tripartite binary-input: 5 classes") {
        const Scenario tri = Scenario::uniform(3, 2, 2);
        const auto report = classify_all(tri);
        CHECK(report.classes.size() == 5);
        for (const auto& c : report.classes) {
            if (c.msf.bottom)
                CHECK(c.size == 54);
            else if (c.msf.fragment == InputCollection::full(tri))
                CHECK(c.size == 1);
            else
                CHECK(c.size == 3);
        }
    }
    SUBCASE("CHSH: Bell class of 15 plus NS") {
        const auto report = classify_all(*chsh());
        REQUIRE(report.classes.size() == 2);
        CHECK(report.classes[0].msf.bottom);
        CHECK(report.classes[0].size == 15);
        CHECK(report.classes[1].size == 1);
        CHECK(report.relations[0][1] == Relation::Subset);
        CHECK(report.relations[1][0] == Relation::Superset);
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(classify_all(Scenario::uniform(2, 3, 2), 10), BudgetExceeded);
    }
}

TEST_CASE("compare agrees with exact vertex sets on CHSH") {
    auto s = chsh();
    std::vector<InputCollection> colls;
    std::vector<VertexSet> sets;
    all_collections(*s, true, [&](const InputCollection& c) {
        colls.push_back(c);
        sets.push_back(pd_vertices(s, c));
    });
    auto subset = [](const VertexSet& a, const VertexSet& b) {
        for (const auto& v : a.vertices)
            if (!b.contains(v)) return false;
        return true;
    };
    for (std::size_t i = 0; i < colls.size(); ++i) {
        for (std::size_t j = 0; j < colls.size(); ++j) {
            const Relation r = compare(*s, colls[i], colls[j]);
            const bool sub = subset(sets[i], sets[j]);
            const bool sup = subset(sets[j], sets[i]);
            switch (r) {
                case Relation::Equal: CHECK((sub && sup)); break;
                case Relation::Subset: CHECK((sub && !sup)); break;
                case Relation::Superset: CHECK((!sub && sup)); break;
                case Relation::Incomparable: CHECK((!sub && !sup)); break;
            }
        }
    }
}
