#include "pdp/exactgeom.hpp"

#include <algorithm>

namespace pdp {

namespace detail {

// Phase-1 feasibility for {x >= 0 : A x = b} via revised simplex with Bland's
// rule.  On success `solution` solves the system; otherwise `farkas` satisfies
// farkas . A_j <= 0 for every column j and farkas . b > 0.
struct Feasibility {
    bool feasible = false;
    Vec solution;
    Vec farkas;
};

Feasibility solve_equality_feasibility(const Mat& a, const Vec& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;

    // Flip rows to make the right-hand side nonnegative.
    Mat rows = a;
    Vec rhs = b;
    std::vector<int> sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (rhs[i] < 0) {
            sign[i] = -1;
            rhs[i] = -rhs[i];
            for (auto& c : rows[i]) c = -c;
        }
    }

    // Basis starts as the artificial identity block (ids n..n+m-1).
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    Mat binv(m, Vec(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) binv[i][i] = 1;
    Vec xb = rhs;

    auto column = [&](std::size_t j, Vec& out) {
        for (std::size_t i = 0; i < m; ++i) out[i] = rows[i][j];
    };

    Vec y(m), col(m), d(m);
    for (;;) {
        // y = c_B B^-1 with c = 1 on artificials, 0 on structural columns.
        for (std::size_t j = 0; j < m; ++j) {
            y[j] = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] >= n) y[j] += binv[i][j];
        }
        // Bland: entering = lowest structural index with negative reduced cost.
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j) {
            Rat yaj = 0;
            for (std::size_t i = 0; i < m; ++i) yaj += y[i] * rows[i][j];
            if (yaj > 0) { enter = j; break; }
        }
        if (enter == n) break;  // optimal

        column(enter, col);
        for (std::size_t i = 0; i < m; ++i) d[i] = dot(binv[i], col);

        std::size_t leave = m;
        Rat best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (d[i] <= 0) continue;
            const Rat ratio = xb[i] / d[i];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw ValidationError("phase-1 simplex unbounded (inconsistent state)");

        // Pivot: replace basis[leave] by enter.
        const Rat piv = d[leave];
        for (auto& c : binv[leave]) c /= piv;
        xb[leave] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || d[i] == 0) continue;
            const Rat f = d[i];
            for (std::size_t j = 0; j < m; ++j) binv[i][j] -= f * binv[leave][j];
            xb[i] -= f * xb[leave];
        }
        basis[leave] = enter;
    }

    Rat cost = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) cost += xb[i];

    Feasibility out;
    if (cost == 0) {
        out.feasible = true;
        out.solution.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) out.solution[basis[i]] = xb[i];
    } else {
        out.feasible = false;
        out.farkas.assign(m, Rat(0));
        for (std::size_t j = 0; j < m; ++j) {
            Rat v = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] >= n) v += binv[i][j];
            out.farkas[j] = v * sign[j];  // undo the row flips
        }
    }
    return out;
}

}  // namespace detail

namespace {

// Convex weights (or a Farkas vector) for the columns listed in `active`.
detail::Feasibility solve_on_columns(const VRep& vrep, const Vec& b,
                                     const std::vector<std::size_t>& active) {
    const std::size_t d = vrep.dim;
    Mat a(d + 1, Vec(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) a[i][k] = vrep.points[active[k]][i];
        a[d][k] = 1;
    }
    return detail::solve_equality_feasibility(a, b);
}

}  // namespace

MembershipCertificate lp_membership(const Vec& point, const VRep& vrep) {
    if (vrep.points.empty()) throw ValidationError("membership query against empty V-representation");
    const std::size_t d = vrep.dim;
    if (point.size() != d) throw ValidationError("membership dimension mismatch");
    for (const auto& p : vrep.points)
        if (p.size() != d) throw ValidationError("V-representation dimension mismatch");

    const std::size_t n = vrep.points.size();

    // A point that coincides with a listed vertex needs no LP.
    for (std::size_t j = 0; j < n; ++j) {
        if (vrep.points[j] == point) {
            Vec weights(n, Rat(0));
            weights[j] = 1;
            return InsideCertificate{std::move(weights)};
        }
    }

    Vec b(point);
    b.push_back(Rat(1));

    // Column generation: solve on a working subset and grow it with columns
    // that break the current Farkas certificate.  On sets that fit in one
    // block this is the plain phase-1 LP.
    const std::size_t block = std::max<std::size_t>(4 * (d + 1), 256);
    std::vector<std::size_t> active;
    std::vector<bool> in_active(n, false);
    for (std::size_t j = 0; j < n && active.size() < block; ++j) {
        active.push_back(j);
        in_active[j] = true;
    }
    detail::Feasibility feas;
    for (;;) {
        feas = solve_on_columns(vrep, b, active);
        if (feas.feasible) break;
        // Farkas y: y . (v_j; 1) <= 0 must hold for every column, not just the
        // active ones; pull in the worst violators and retry.
        std::vector<std::pair<Rat, std::size_t>> violating;
        for (std::size_t j = 0; j < n; ++j) {
            if (in_active[j]) continue;
            Rat slack = feas.farkas[d];
            for (std::size_t i = 0; i < d; ++i) {
                if (feas.farkas[i] == 0) continue;
                slack += feas.farkas[i] * vrep.points[j][i];
            }
            if (slack > 0) violating.emplace_back(slack, j);
        }
        if (violating.empty()) break;  // certificate is globally valid
        std::sort(violating.begin(), violating.end(),
                  [](const auto& x, const auto& y) {
                      return x.first != y.first ? x.first > y.first : x.second < y.second;
                  });
        const std::size_t take = std::min<std::size_t>(violating.size(), d + 1);
        for (std::size_t k = 0; k < take; ++k) {
            active.push_back(violating[k].second);
            in_active[violating[k].second] = true;
        }
    }

    if (feas.feasible) {
        // Spread the subset weights back over the full column list.
        Vec weights(n, Rat(0));
        for (std::size_t k = 0; k < active.size(); ++k) weights[active[k]] = feas.solution[k];
        feas.solution = std::move(weights);
        // Verify: weights nonnegative, sum 1, exact reconstruction.
        Rat total = 0;
        for (const Rat& w : feas.solution) {
            if (w < 0) throw ValidationError("internal: negative convex weight");
            total += w;
        }
        if (total != 1) throw ValidationError("internal: convex weights do not sum to 1");
        for (std::size_t i = 0; i < d; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < n; ++j) s += feas.solution[j] * vrep.points[j][i];
            if (s != point[i]) throw ValidationError("internal: certificate fails reconstruction");
        }
        return InsideCertificate{std::move(feas.solution)};
    }

    // Farkas vector (u, u0): u . v_j + u0 <= 0 for all j, u . point + u0 > 0.
    Vec coeffs(feas.farkas.begin(), feas.farkas.begin() + static_cast<std::ptrdiff_t>(d));
    const Rat bound = -feas.farkas[d];
    AffineFunctional sep{std::move(coeffs), bound};
    if (sep.evaluate(point) <= sep.bound)
        throw ValidationError("internal: separator does not separate the query point");
    for (const auto& v : vrep.points)
        if (sep.evaluate(v) > sep.bound)
            throw ValidationError("internal: separator cuts a vertex");
    return OutsideCertificate{std::move(sep)};
}

}  // namespace pdp
