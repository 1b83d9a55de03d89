#include "pdp/applications.hpp"
#include "pdp/exactgeom.hpp"
#include "pdp/polytopes.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pdp;

namespace {

std::shared_ptr<const Scenario> chsh() {
    static auto s = std::make_shared<Scenario>(Scenario::uniform(2, 2, 2));
    return s;
}

// Independent oracle: enumerate all dim-subsets of the reduced inequality
// rows, solve each square system, keep feasible unique solutions.
std::vector<Vec> brute_force_vertices(const HRep& h) {
    Mat eq;
    Vec rhs;
    for (const auto& e : h.equalities) {
        eq.push_back(e.coeffs);
        rhs.push_back(e.rhs);
    }
    Vec x0(h.dim, Rat(0));
    std::vector<Vec> basis;
    if (!eq.empty()) {
        const auto sol = solve_affine(eq, rhs);
        REQUIRE(sol);
        x0 = sol->particular;
        basis = sol->nullspace;
    } else {
        for (std::size_t j = 0; j < h.dim; ++j) {
            Vec n(h.dim, Rat(0));
            n[j] = 1;
            basis.push_back(std::move(n));
        }
    }
    const std::size_t m = basis.size();
    Mat rows;
    Vec bounds;
    for (const auto& iq : h.inequalities) {
        Vec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = dot(iq.coeffs, basis[j]);
        rows.push_back(std::move(row));
        bounds.push_back(iq.bound - dot(iq.coeffs, x0));
    }

    std::vector<Vec> found;
    std::vector<std::size_t> pick(m);
    const std::size_t n = rows.size();
    // iterate all m-combinations of n rows
    for (std::size_t j = 0; j < m; ++j) pick[j] = j;
    for (;;) {
        Mat a;
        Vec b;
        for (std::size_t j : pick) {
            a.push_back(rows[j]);
            b.push_back(bounds[j]);
        }
        if (const auto sol = solve_affine(a, b); sol && sol->nullspace.empty()) {
            bool feasible = true;
            for (std::size_t r = 0; r < n && feasible; ++r)
                feasible = dot(rows[r], sol->particular) <= bounds[r];
            if (feasible) {
                Vec x = x0;
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t k = 0; k < h.dim; ++k)
                        x[k] += sol->particular[j] * basis[j][k];
                found.push_back(std::move(x));
            }
        }
        // next combination
        std::size_t i = m;
        while (i-- > 0) {
            if (pick[i] + (m - i) < n) {
                ++pick[i];
                for (std::size_t j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) {
                std::sort(found.begin(), found.end());
                found.erase(std::unique(found.begin(), found.end()), found.end());
                return found;
            }
        }
    }
}

HRep simplex_hrep(std::size_t k) {
    // probability simplex over k outcomes
    HRep h;
    h.dim = k;
    for (std::size_t i = 0; i < k; ++i) {
        Vec c(k, Rat(0));
        c[i] = -1;
        h.inequalities.push_back({std::move(c), Rat(0)});
    }
    Vec norm(k, Rat(1));
    h.equalities.push_back({std::move(norm), Rat(1)});
    return h;
}

}  // namespace

TEST_CASE("lp membership certificates") {
    const auto bell = bell_vertices(chsh());
    const VRep v = bell.vrep();

    SUBCASE("vertex against its own set") {
        const auto cert = lp_membership(bell.vertices[5].table(), v);
        REQUIRE(is_inside(cert));
        const auto& w = std::get<InsideCertificate>(cert).weights;
        Rat sum = 0;
        for (const auto& x : w) sum += x;
        CHECK(sum == 1);
        CHECK(w[5] == 1);
    }
    SUBCASE("uniform point is inside") {
        CHECK(is_inside(lp_membership(Behaviour::uniform(chsh()).table(), v)));
    }
    SUBCASE("PR box is outside with a verified separator") {
        const Behaviour pr = pr_box(chsh());
        const auto cert = lp_membership(pr.table(), v);
        REQUIRE(!is_inside(cert));
        const auto& sep = std::get<OutsideCertificate>(cert).separator;
        CHECK(sep.evaluate(pr.table()) > sep.bound);
        for (const auto& b : bell.vertices) CHECK(sep.evaluate(b.table()) <= sep.bound);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(lp_membership(Vec(3, Rat(0)), v), ValidationError);
    }
}

TEST_CASE("affine rank") {
    CHECK(affine_rank(bell_vertices(chsh()).vrep()) == 8);
    CHECK(affine_rank(ns_vertices(chsh()).vrep()) == 8);
    CHECK(affine_rank(e_vertices(chsh()).vrep()) == 12);
    VRep single;
    single.dim = 4;
    single.points.push_back(Vec(4, Rat(1)));
    CHECK(affine_rank(single) == 0);
}

TEST_CASE("vertex enumeration against the brute-force oracle") {
    SUBCASE("probability simplex") {
        const auto v = vertices_from_hrep(simplex_hrep(3));
        CHECK(v.points.size() == 3);
        CHECK(v.points == brute_force_vertices(simplex_hrep(3)));
    }
    SUBCASE("one party, two inputs: product of simplices") {
        const Scenario s({"A"}, {{"x1", "x2"}}, {{{"0", "1", "2"}, {"0", "1"}}});
        const HRep h = ns_hrep(s);
        const auto v = vertices_from_hrep(h);
        CHECK(v.points.size() == 6);  // 3 * 2 deterministic points
        CHECK(v.points == brute_force_vertices(h));
    }
    SUBCASE("CHSH no-signalling polytope") {
        const HRep h = ns_hrep(*chsh());
        const auto v = vertices_from_hrep(h);
        CHECK(v.points.size() == 24);
        CHECK(v.points == brute_force_vertices(h));
    }
}

TEST_CASE("facet enumeration") {
    SUBCASE("triangle") {
        const auto f = facets_from_vrep(vertices_from_hrep(simplex_hrep(3)));
        CHECK(f.inequalities.size() == 3);
        CHECK(f.equalities.size() == 1);
    }
    SUBCASE("CHSH Bell polytope: 16 positivity + 8 CHSH") {
        const auto bell = bell_vertices(chsh());
        const auto f = facets_from_vrep(bell.vrep());
        CHECK(f.inequalities.size() == 24);
        for (const auto& iq : f.inequalities)
            for (const auto& b : bell.vertices) CHECK(iq.evaluate(b.table()) <= iq.bound);
        // Each PR variant violates exactly one facet; the violated facets are
        // pairwise distinct, so exactly 8 facets are CHSH-type.
        const auto orbit = relabeling_orbit(pr_box(chsh()));
        REQUIRE(orbit.size() == 8);
        std::set<std::size_t> violated;
        for (const auto& pr : orbit) {
            std::size_t count = 0, which = 0;
            for (std::size_t k = 0; k < f.inequalities.size(); ++k) {
                if (f.inequalities[k].evaluate(pr.table()) > f.inequalities[k].bound) {
                    ++count;
                    which = k;
                }
            }
            CHECK(count == 1);
            violated.insert(which);
        }
        CHECK(violated.size() == 8);
    }
    SUBCASE("CHSH NS polytope: 16 positivity facets") {
        const auto f = facets_from_vrep(ns_vertices(chsh()).vrep());
        CHECK(f.inequalities.size() == 16);
    }
    SUBCASE("round trip") {
        const auto bell = bell_vertices(chsh());
        const auto back = vertices_from_hrep(facets_from_vrep(bell.vrep()));
        std::vector<Vec> expect;
        for (const auto& b : bell.vertices) expect.push_back(b.table());
        std::sort(expect.begin(), expect.end());
        CHECK(back.points == expect);

        const auto ns = ns_vertices(chsh());
        const auto back2 = vertices_from_hrep(facets_from_vrep(ns.vrep()));
        std::vector<Vec> expect2;
        for (const auto& b : ns.vertices) expect2.push_back(b.table());
        std::sort(expect2.begin(), expect2.end());
        CHECK(back2.points == expect2);
    }
}

TEST_CASE("enumeration is deterministic across thread counts") {
    const HRep h = ns_hrep(*chsh());
    EnumerationBudget seq;
    seq.threads = 1;
    EnumerationBudget par;
    par.threads = 4;
    CHECK(vertices_from_hrep(h, seq).points == vertices_from_hrep(h, par).points);
    const auto bell = bell_vertices(chsh()).vrep();
    const auto f1 = facets_from_vrep(bell, seq);
    const auto f2 = facets_from_vrep(bell, par);
    REQUIRE(f1.inequalities.size() == f2.inequalities.size());
    for (std::size_t k = 0; k < f1.inequalities.size(); ++k) {
        CHECK(f1.inequalities[k].coeffs == f2.inequalities[k].coeffs);
        CHECK(f1.inequalities[k].bound == f2.inequalities[k].bound);
    }
}

TEST_CASE("degenerate and failing inputs") {
    SUBCASE("unbounded") {
        HRep h;
        h.dim = 1;
        h.inequalities.push_back({Vec{Rat(-1)}, Rat(0)});  // x >= 0 only
        CHECK_THROWS_AS(vertices_from_hrep(h), ValidationError);
    }
    SUBCASE("empty") {
        HRep h;
        h.dim = 1;
        h.inequalities.push_back({Vec{Rat(1)}, Rat(-1)});   // x <= -1
        h.inequalities.push_back({Vec{Rat(-1)}, Rat(0)});   // x >= 0
        CHECK_THROWS_AS(vertices_from_hrep(h), ValidationError);
    }
    SUBCASE("inconsistent equalities") {
        HRep h;
        h.dim = 2;
        h.inequalities.push_back({Vec{Rat(-1), Rat(0)}, Rat(0)});
        h.equalities.push_back({Vec{Rat(1), Rat(1)}, Rat(1)});
        h.equalities.push_back({Vec{Rat(1), Rat(1)}, Rat(2)});
        CHECK_THROWS_AS(vertices_from_hrep(h), ValidationError);
    }
    SUBCASE("ray budget") {
        EnumerationBudget tiny;
        tiny.max_rays = 4;
        CHECK_THROWS_AS(vertices_from_hrep(ns_hrep(*chsh()), tiny), BudgetExceeded);
    }
    SUBCASE("a single point polytope") {
        HRep h;
        h.dim = 2;
        h.inequalities.push_back({Vec{Rat(-1), Rat(0)}, Rat(0)});
        h.equalities.push_back({Vec{Rat(1), Rat(0)}, Rat(0)});
        h.equalities.push_back({Vec{Rat(0), Rat(1)}, Rat(3)});
        const auto v = vertices_from_hrep(h);
        REQUIRE(v.points.size() == 1);
        CHECK(v.points[0] == Vec{Rat(0), Rat(3)});
    }
}
