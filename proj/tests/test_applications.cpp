#include "pdp/applications.hpp"
#include "pdp/classify.hpp"
#include "pdp/product.hpp"

#include <doctest.h>

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

}  // namespace

TEST_CASE("CHSH and CH inequalities") {
    auto s = chsh();
    const Inequality chsh_iq = build_inequality(s, InequalityFamily::CHSH);
    const Behaviour pr = pr_box(s);
    CHECK(evaluate(chsh_iq, pr) == 4);

    Rat best = -100;
    for (const auto& b : bell_vertices(s).vertices) best = std::max(best, evaluate(chsh_iq, b));
    CHECK(best == 2);

    // CH and CHSH agree on no-signalling behaviours: CHSH = 4 CH + 2.
    const Inequality ch = build_inequality(s, InequalityFamily::CH);
    std::vector<Behaviour> samples = {pr, Behaviour::uniform(s), bell_vertices(s).vertices[9]};
    for (const auto& wp : samples)
        CHECK(evaluate(chsh_iq, wp) == 4 * evaluate(ch, wp) + 2);
    Rat lo = 100, hi = -100;
    for (const auto& b : bell_vertices(s).vertices) {
        lo = std::min(lo, evaluate(ch, b));
        hi = std::max(hi, evaluate(ch, b));
    }
    CHECK(hi == 0);
    CHECK(lo == -1);

    CHECK_THROWS_AS(build_inequality(tri(), InequalityFamily::CHSH), ValidationError);
}

TEST_CASE("PR boxes") {
    auto s = chsh();
    const Behaviour pr = pr_box(s);
    CHECK(is_no_signalling(pr));
    for (std::size_t c = 0; c < 4; ++c)
        CHECK(marginal(pr, {0}, c) == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    CHECK(relabeling_orbit(pr).size() == 8);

    // relabeled PR box maximizes the matching relabeled CHSH
    Relabeling flip = Relabeling::identity(*s);
    std::swap(flip.input_map[0][0], flip.input_map[0][1]);
    const Behaviour pr2 = pr_box(s, flip);
    const Inequality iq2{relabel_functional(*s, build_inequality(s, InequalityFamily::CHSH).functional, flip),
                         "CHSH'"};
    CHECK(evaluate(iq2, pr2) == 4);
}

TEST_CASE("Sliwa values on partial PR boxes") {
    auto s = tri();
    const std::vector<Inequality> sliwa{build_inequality(s, InequalityFamily::Sliwa3A),
                                        build_inequality(s, InequalityFamily::Sliwa3B),
                                        build_inequality(s, InequalityFamily::Sliwa3C)};
    for (std::size_t k = 0; k < 3; ++k) {
        const Behaviour box = partial_pr_box(s, k);
        CHECK(is_partially_predictable(box, InputCollection::party_block(*s, {k})));
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(evaluate(sliwa[j], box) == (j == k ? Rat(2) : Rat(4)));
    }
    // every vertex of PD(S, M^{A}) satisfies Sliwa 3A; some vertex of the other
    // two polytopes reaches the algebraic maximum 4
    const auto pd_a = pd_vertices(s, InputCollection::party_block(*s, {0}));
    for (const auto& v : pd_a.vertices) CHECK(evaluate(sliwa[0], v) <= 2);
    for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
        Rat best = -100;
        for (const auto& v : pd_vertices(s, InputCollection::party_block(*s, {k})).vertices)
            best = std::max(best, evaluate(sliwa[0], v));
        CHECK(best == 4);
    }
}

TEST_CASE("inseparability reports") {
    auto s = tri();
    std::vector<Behaviour> boxes;
    for (std::size_t k = 0; k < 3; ++k) boxes.push_back(partial_pr_box(s, k));

    SUBCASE("each component is inside its own polytope only") {
        const auto report = inseparability_report(boxes[0], {{0}, {1}, {2}});
        CHECK(report.entries[0].inside);
        CHECK(!report.entries[1].inside);
        CHECK(!report.entries[2].inside);
        CHECK(!report.inside_intersection);
        CHECK(report.inside_union);
        CHECK(report.inside_hull);
        CHECK(report.weakly_inseparable());
        CHECK(!report.collection_inseparable());
    }
    SUBCASE("the 1/3 mixture witnesses union non-convexity") {
        const Behaviour third = mix(std::vector<std::pair<Rat, Behaviour>>{
            {Rat(1, 3), boxes[0]}, {Rat(1, 3), boxes[1]}, {Rat(1, 3), boxes[2]}});
        const auto report = inseparability_report(third, {{0}, {1}, {2}});
        for (const auto& e : report.entries) CHECK(!e.inside);
        CHECK(report.collection_inseparable());
        // ... while remaining inside the hull of the union (so the union is not
        // convex); the hull certificate reconstructs the mixture.
        CHECK(report.inside_hull);
        CHECK(!report.strongly_inseparable());
    }
    SUBCASE("pair mixtures escape both their polytopes") {
        const Behaviour half = mix(std::vector<std::pair<Rat, Behaviour>>{{Rat(1, 2), boxes[0]},
                                                                          {Rat(1, 2), boxes[1]}});
        const auto report = inseparability_report(half, {{0}, {1}});
        CHECK(!report.entries[0].inside);
        CHECK(!report.entries[1].inside);
        CHECK(report.inside_hull);
    }
    SUBCASE("Bell-local behaviours are inside everything") {
        const auto report =
            inseparability_report(Behaviour::uniform(s), {{0}, {1}, {2}, {0, 1}, {1, 2}});
        for (const auto& e : report.entries) CHECK(e.inside);
        CHECK(report.inside_intersection);
        CHECK(report.inside_hull);
    }
}

TEST_CASE("NS2 and Svetlichny sets") {
    auto s = tri();
    const auto ns2 = ns2_vertices(s);
    // union of the three PD vertex sets: 64 shared deterministic + 3 x 32 PR-type
    CHECK(ns2.vertices.size() == 160);
    const Behaviour third = mix(std::vector<std::pair<Rat, Behaviour>>{
        {Rat(1, 3), partial_pr_box(s, 0)},
        {Rat(1, 3), partial_pr_box(s, 1)},
        {Rat(1, 3), partial_pr_box(s, 2)}});
    CHECK(is_inside(membership(third, ns2)));

    const auto sl = svetlichny_vertices(s);
    CHECK(sl.vertices.size() > ns2.vertices.size());
    // conv(NS2) sits inside SL: the deterministic NS2 generators appear
    // directly, the PR-type ones are mixtures of signalling SL generators.
    for (const auto& v : bell_vertices(s).vertices) CHECK(sl.contains(v));
    CHECK(is_inside(membership(partial_pr_box(s, 0), sl)));
    // strictness: some Svetlichny generator allows signalling across the free
    // pair, so SL is not contained in the no-signalling polytope
    bool some_signalling = false;
    for (const auto& v : sl.vertices)
        if (!is_no_signalling(v)) { some_signalling = true; break; }
    CHECK(some_signalling);
}

TEST_CASE("broadcast-local sets") {
    auto s = tri();
    SUBCASE("single broadcaster equals the PD polytope") {
        const auto bl = broadcast_local_vertices(s, {0}, {{1, 2}});
        const auto pd = pd_vertices(s, InputCollection::party_block(*s, {0}));
        CHECK(bl.vertices == pd.vertices);
        const auto no_blocks = broadcast_local_vertices(s, {0, 1, 2}, {});
        CHECK(no_blocks.vertices == bell_vertices(s).vertices);
    }
    SUBCASE("one block covering everything reproduces the no-blocks NS case") {
        const auto one = broadcast_local_vertices(chsh(), {}, {{0, 1}});
        CHECK(one.vertices == ns_vertices(chsh()).vertices);
    }
    SUBCASE("cross-block restriction collapses to the Bell polytope") {
        const auto gb = broadcast_local_vertices(s, {}, {{0}, {1, 2}});
        const InputCollection pair = InputCollection::party_block(*s, {0, 1});
        auto pair_s = std::make_shared<Scenario>(restrict_scenario(*s, pair));
        VertexSet image;
        image.scenario = pair_s;
        image.family = Family::Composed;
        for (const auto& v : gb.vertices) image.vertices.push_back(restrict_behaviour(v, pair));
        canonicalize(image);
        // conv(image) = B: every Bell vertex appears and every image point is
        // Bell-local (the PR marginals flatten to mixtures).
        const auto pair_bell = bell_vertices(pair_s);
        for (const auto& b : pair_bell.vertices) CHECK(image.contains(b));
        for (const auto& v : image.vertices) CHECK(is_inside(membership(v, pair_bell)));
    }
    SUBCASE("invalid block structures") {
        CHECK_THROWS_AS(broadcast_local_vertices(s, {0}, {{1}}), ValidationError);
        CHECK_THROWS_AS(broadcast_local_vertices(s, {0}, {{1, 2}, {2}}), ValidationError);
    }
}

TEST_CASE("sequential Wigner's friend mapping") {
    auto s33 = std::make_shared<Scenario>(Scenario::uniform(2, 3, 2));
    SUBCASE("one query per side gives a polytope that is neither Bell nor NS") {
        const auto [base, coll] = sequential_to_pd(SequentialScenario{s33, {1, 1}});
        CHECK(coll.count(0) == 1);
        CHECK(coll.count(1) == 1);
        CHECK(!is_bell(*base, coll));
        CHECK(!is_ns(*base, coll));
    }
    SUBCASE("|Z_i| = |M_i| - 1 collapses to Bell") {
        const auto [base, coll] = sequential_to_pd(SequentialScenario{s33, {2, 2}});
        CHECK(is_bell(*base, coll));
    }
    SUBCASE("no friends means no constraints beyond NS") {
        const auto [base, coll] = sequential_to_pd(SequentialScenario{s33, {0, 0}});
        CHECK(coll.is_empty());
        CHECK(is_ns(*base, coll));
    }
    SUBCASE("class-equal query collections give identical vertex sets") {
        auto s = tri();
        const auto [b1, c1] = sequential_to_pd(SequentialScenario{s, {1, 0, 0}});
        const auto [b2, c2] = sequential_to_pd(SequentialScenario{s, {2, 0, 0}});
        CHECK(compare(*s, c1, c2) == Relation::Equal);
        CHECK(pd_vertices(s, c1).vertices == pd_vertices(s, c2).vertices);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(sequential_to_pd(SequentialScenario{s33, {4, 0}}), ValidationError);
        CHECK_THROWS_AS(sequential_to_pd(SequentialScenario{s33, {1}}), ValidationError);
    }
}
