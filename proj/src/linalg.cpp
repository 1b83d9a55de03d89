#include "pdp/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pdp {

namespace {

// Row echelon with partial structural pivoting; returns pivot column per row.
std::vector<std::size_t> echelonize(Mat& a) {
    std::vector<std::size_t> pivot_cols;
    if (a.empty()) return pivot_cols;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const Rat inv = Rat(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

std::size_t rank_of(Mat a) { return echelonize(a).size(); }

std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b) {
    if (a.size() != b.size()) throw ValidationError("solve_affine shape mismatch");
    if (a.empty()) return AffineSolution{Vec{}, {}};
    const std::size_t rows = a.size(), cols = a[0].size();
    Mat aug(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    const auto pivots = echelonize(aug);
    // Inconsistent iff some pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    AffineSolution sol;
    sol.particular.assign(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug[r][cols];

    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec n(cols, Rat(0));
        n[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) n[pivots[r]] = -aug[r][c];
        sol.nullspace.push_back(std::move(n));
    }
    return sol;
}

Mat invert(Mat a) {
    const std::size_t n = a.size();
    for (auto& row : a) {
        if (row.size() != n) throw ValidationError("invert: not square");
        row.resize(2 * n, Rat(0));
    }
    for (std::size_t i = 0; i < n; ++i) a[i][n + i] = 1;
    const auto pivots = echelonize(a);
    if (pivots.size() != n || pivots.back() != n - 1) throw ValidationError("invert: singular matrix");
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec scale_to_integers(const Vec& v) {
    Int lcm = 1;
    for (const Rat& r : v) lcm = boost::multiprecision::lcm(lcm, rat_den(r));
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat_num(v[i]) * (lcm / rat_den(v[i]));
    reduce_by_gcd(out);
    return out;
}

void reduce_by_gcd(IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (Int& x : v) x /= g;
}

}  // namespace pdp
