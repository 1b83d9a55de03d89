#include "pdp/exactgeom.hpp"

#include <algorithm>

namespace pdp {

namespace {

// Reduce a functional's coefficients against the equality system so that every
// inequality over the affine hull has one canonical representative.  The
// equalities are assumed echelonized with unit pivots.
void eliminate_pivots(Vec& coeffs, Rat& bound, const std::vector<LinearEquality>& eqs,
                      const std::vector<std::size_t>& pivot_cols) {
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        const Rat f = coeffs[pivot_cols[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] -= f * eqs[k].coeffs[j];
        bound -= f * eqs[k].rhs;
    }
}

struct CanonicalFunctional {
    IntVec coeffs;
    Int bound;
    bool operator<(const CanonicalFunctional& o) const {
        if (coeffs != o.coeffs) return coeffs < o.coeffs;
        return bound < o.bound;
    }
    bool operator==(const CanonicalFunctional& o) const {
        return coeffs == o.coeffs && bound == o.bound;
    }
};

CanonicalFunctional canonicalize(Vec coeffs, Rat bound) {
    Vec all = coeffs;
    all.push_back(bound);
    IntVec scaled = scale_to_integers(all);  // positive scaling keeps the sense
    CanonicalFunctional out;
    out.coeffs.assign(scaled.begin(), scaled.end() - 1);
    out.bound = scaled.back();
    return out;
}

}  // namespace

std::size_t affine_rank(const VRep& vrep) {
    if (vrep.points.empty()) throw ValidationError("affine_rank of empty point set");
    Mat diffs;
    for (std::size_t i = 1; i < vrep.points.size(); ++i) {
        Vec d(vrep.dim);
        for (std::size_t j = 0; j < vrep.dim; ++j) d[j] = vrep.points[i][j] - vrep.points[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return rank_of(std::move(diffs));
}

VRep vertices_from_hrep(const HRep& hrep, const EnumerationBudget& budget) {
    const std::size_t d = hrep.dim;
    if (hrep.inequalities.empty()) throw ValidationError("vertex enumeration needs inequalities");

    // Eliminate the equalities: x = x0 + N y.
    Vec x0(d, Rat(0));
    std::vector<Vec> basis;
    if (!hrep.equalities.empty()) {
        Mat e;
        Vec f;
        for (const auto& eq : hrep.equalities) {
            if (eq.coeffs.size() != d) throw ValidationError("equality dimension mismatch");
            e.push_back(eq.coeffs);
            f.push_back(eq.rhs);
        }
        auto sol = solve_affine(e, f);
        if (!sol) throw ValidationError("empty polyhedron (inconsistent equalities)");
        x0 = std::move(sol->particular);
        basis = std::move(sol->nullspace);
    } else {
        for (std::size_t j = 0; j < d; ++j) {
            Vec n(d, Rat(0));
            n[j] = 1;
            basis.push_back(std::move(n));
        }
    }
    const std::size_t m = basis.size();

    if (m == 0) {
        // Unique candidate point; it is the polytope iff it satisfies everything.
        for (const auto& iq : hrep.inequalities)
            if (!iq.satisfied_by(x0)) throw ValidationError("empty polyhedron");
        return VRep{d, {x0}};
    }

    // Homogenized cone rows: (b - C x0 | -C N) . (t, y) >= 0, plus t >= 0.
    IntMat rows;
    rows.reserve(hrep.inequalities.size() + 1);
    for (const auto& iq : hrep.inequalities) {
        if (iq.coeffs.size() != d) throw ValidationError("inequality dimension mismatch");
        Vec row(m + 1);
        row[0] = iq.bound - dot(iq.coeffs, x0);
        for (std::size_t j = 0; j < m; ++j) row[j + 1] = -dot(iq.coeffs, basis[j]);
        rows.push_back(scale_to_integers(row));
    }
    {
        Vec t_row(m + 1, Rat(0));
        t_row[0] = 1;
        rows.push_back(scale_to_integers(t_row));
    }

    IntMat rays;
    try {
        rays = extreme_rays(rows, budget);
    } catch (const ValidationError&) {
        throw ValidationError("vertex enumeration failed: polyhedron is empty or unbounded");
    }

    VRep out;
    out.dim = d;
    for (const auto& ray : rays) {
        if (ray[0] == 0) throw ValidationError("unbounded polyhedron");
        if (ray[0] < 0) continue;  // cannot occur for gcd-reduced feasible rays
        const Rat t(ray[0]);
        Vec x = x0;
        for (std::size_t j = 0; j < m; ++j) {
            const Rat yj = Rat(ray[j + 1]) / t;
            if (yj == 0) continue;
            for (std::size_t k = 0; k < d; ++k) x[k] += yj * basis[j][k];
        }
        out.points.push_back(std::move(x));
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    if (out.points.empty()) throw ValidationError("empty polyhedron");
    return out;
}

HRep facets_from_vrep(const VRep& vrep, const EnumerationBudget& budget) {
    if (vrep.points.empty()) throw ValidationError("facet enumeration of empty point set");
    const std::size_t d = vrep.dim;
    const Vec& p0 = vrep.points[0];

    // Affine hull: nullspace of the difference matrix gives the equalities.
    Mat diffs;
    for (std::size_t i = 1; i < vrep.points.size(); ++i) {
        Vec dv(d);
        for (std::size_t j = 0; j < d; ++j) dv[j] = vrep.points[i][j] - p0[j];
        diffs.push_back(std::move(dv));
    }
    std::vector<LinearEquality> equalities;
    std::vector<std::size_t> eq_pivots;
    {
        Mat a = diffs.empty() ? Mat{Vec(d, Rat(0))} : diffs;
        auto hull = solve_affine(a, Vec(a.size(), Rat(0)));
        // hull->nullspace spans directions h with diffs . h = 0 — transposed view
        // is needed: we want h with h . diff = 0 for all diffs, i.e. the nullspace
        // of diffs as a matrix acting on h.  diffs rows ARE the constraints, so
        // solve_affine(diffs, 0) is exactly that system.
        for (const auto& h : hull->nullspace) {
            LinearEquality eq{h, dot(h, p0)};
            equalities.push_back(std::move(eq));
        }
    }
    // Echelonize the equality coefficients for canonical reduction.
    if (!equalities.empty()) {
        Mat e;
        for (auto& eq : equalities) {
            Vec row = eq.coeffs;
            row.push_back(eq.rhs);
            e.push_back(std::move(row));
        }
        // Row-reduce the (coeffs | rhs) matrix.
        std::vector<LinearEquality> reduced;
        Mat a = e;
        // reuse solve machinery: echelon via rank computation is not exposed, do
        // a local elimination.
        std::size_t r = 0;
        for (std::size_t c = 0; c < d && r < a.size(); ++c) {
            std::size_t p = r;
            while (p < a.size() && a[p][c] == 0) ++p;
            if (p == a.size()) continue;
            std::swap(a[r], a[p]);
            const Rat inv = Rat(1) / a[r][c];
            for (auto& v : a[r]) v *= inv;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i == r || a[i][c] == 0) continue;
                const Rat f = a[i][c];
                for (std::size_t j = 0; j <= d; ++j) a[i][j] -= f * a[r][j];
            }
            eq_pivots.push_back(c);
            ++r;
        }
        reduced.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            Vec coeffs(a[i].begin(), a[i].end() - 1);
            reduced.push_back(LinearEquality{std::move(coeffs), a[i].back()});
        }
        equalities = std::move(reduced);
    }

    const std::size_t hull_dim = affine_rank(vrep);

    if (hull_dim == 0) {
        HRep out;
        out.dim = d;
        for (auto& eq : equalities) {
            auto c = canonicalize(eq.coeffs, eq.rhs);
            Vec cv(c.coeffs.size());
            for (std::size_t j = 0; j < cv.size(); ++j) cv[j] = Rat(c.coeffs[j]);
            out.equalities.push_back(LinearEquality{std::move(cv), Rat(c.bound)});
        }
        return out;
    }

    // Chart: independent rows of the hull basis let us express y = G (p - p0).
    std::vector<Vec> hull_basis;
    {
        Mat a = diffs;
        // pick a maximal independent subset of diffs as the hull basis
        Mat probe;
        for (auto& dv : a) {
            Mat trial = probe;
            trial.push_back(dv);
            if (rank_of(trial) > probe.size()) {
                probe = std::move(trial);
                hull_basis.push_back(dv);
                if (hull_basis.size() == hull_dim) break;
            }
        }
    }
    // Select hull_dim coordinate rows where the basis matrix is invertible.
    std::vector<std::size_t> chart_rows;
    {
        Mat probe;
        for (std::size_t j = 0; j < d && chart_rows.size() < hull_dim; ++j) {
            Vec row(hull_dim);
            for (std::size_t k = 0; k < hull_dim; ++k) row[k] = hull_basis[k][j];
            Mat trial = probe;
            trial.push_back(row);
            if (rank_of(trial) > probe.size()) {
                probe = std::move(trial);
                chart_rows.push_back(j);
            }
        }
        if (chart_rows.size() != hull_dim)
            throw ValidationError("internal: degenerate affine chart");
    }
    Mat chart_square(hull_dim, Vec(hull_dim));
    for (std::size_t i = 0; i < hull_dim; ++i)
        for (std::size_t k = 0; k < hull_dim; ++k) chart_square[i][k] = hull_basis[k][chart_rows[i]];
    const Mat chart_inv = invert(std::move(chart_square));  // y = chart_inv (p - p0)|chart_rows

    auto to_chart = [&](const Vec& p) {
        Vec y(hull_dim, Rat(0));
        for (std::size_t i = 0; i < hull_dim; ++i) {
            Rat acc = 0;
            for (std::size_t k = 0; k < hull_dim; ++k)
                acc += chart_inv[i][k] * (p[chart_rows[k]] - p0[chart_rows[k]]);
            y[i] = acc;
        }
        return y;
    };

    // Facets of conv(Y) = extreme rays of {(beta, c) : beta . y_i - c <= 0}.
    IntMat rows;
    rows.reserve(vrep.points.size());
    for (const auto& p : vrep.points) {
        const Vec y = to_chart(p);
        Vec row(hull_dim + 1);
        for (std::size_t j = 0; j < hull_dim; ++j) row[j] = -y[j];
        row[hull_dim] = 1;
        rows.push_back(scale_to_integers(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const IntMat rays = extreme_rays(rows, budget);

    std::vector<CanonicalFunctional> canon;
    for (const auto& ray : rays) {
        // Drop the trivial ray (0,...,0,1).
        bool all_zero = true;
        for (std::size_t j = 0; j < hull_dim; ++j)
            if (ray[j] != 0) { all_zero = false; break; }
        if (all_zero) continue;

        // beta . y <= c lifted back: y_i = sum_k chart_inv[i][k] (p[r_k] - p0[r_k]).
        Vec coeffs(d, Rat(0));
        Rat bound = Rat(ray[hull_dim]);
        for (std::size_t i = 0; i < hull_dim; ++i) {
            const Rat beta(ray[i]);
            if (beta == 0) continue;
            for (std::size_t k = 0; k < hull_dim; ++k) {
                const Rat g = beta * chart_inv[i][k];
                if (g == 0) continue;
                coeffs[chart_rows[k]] += g;
                bound += g * p0[chart_rows[k]];
            }
        }
        eliminate_pivots(coeffs, bound, equalities, eq_pivots);
        canon.push_back(canonicalize(std::move(coeffs), std::move(bound)));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    HRep out;
    out.dim = d;
    for (auto& c : canon) {
        Vec cv(c.coeffs.size());
        for (std::size_t j = 0; j < cv.size(); ++j) cv[j] = Rat(c.coeffs[j]);
        out.inequalities.push_back(AffineFunctional{std::move(cv), Rat(c.bound)});
    }
    for (auto& eq : equalities) {
        auto c = canonicalize(eq.coeffs, eq.rhs);
        // Equalities admit a sign flip; fix the first nonzero coefficient positive.
        bool flip = false;
        for (const Int& v : c.coeffs) {
            if (v != 0) { flip = v < 0; break; }
        }
        if (flip) {
            for (Int& v : c.coeffs) v = -v;
            c.bound = -c.bound;
        }
        Vec cv(c.coeffs.size());
        for (std::size_t j = 0; j < cv.size(); ++j) cv[j] = Rat(c.coeffs[j]);
        out.equalities.push_back(LinearEquality{std::move(cv), Rat(c.bound)});
    }
    return out;
}

}  // namespace pdp
