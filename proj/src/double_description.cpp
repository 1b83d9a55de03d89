#include "pdp/exactgeom.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace pdp {

namespace {

using Words = std::vector<std::uint64_t>;

struct Ray {
    IntVec v;
    Words zero;  // bit r: row r slack == 0
    Words neg;   // bit r: row r slack < 0
};

struct Sweep {
    const IntMat& rows;
    std::size_t n_rows;
    std::size_t dim;
    std::size_t words;
    Words processed;  // rows folded into the description so far
    std::vector<Ray> rays;
    std::size_t max_rays;
    int threads;

    Sweep(const IntMat& rows_, std::size_t max_rays_, int threads_)
        : rows(rows_),
          n_rows(rows_.size()),
          dim(rows_.empty() ? 0 : rows_[0].size()),
          words((n_rows + 63) / 64),
          processed(words, 0),
          max_rays(max_rays_),
          threads(threads_) {}

    Ray make_ray(IntVec v) const {
        reduce_by_gcd(v);
        Ray r{std::move(v), Words(words, 0), Words(words, 0)};
        for (std::size_t i = 0; i < n_rows; ++i) {
            const Int s = dot(rows[i], r.v);
            if (s == 0)
                r.zero[i / 64] |= (std::uint64_t{1} << (i % 64));
            else if (s < 0)
                r.neg[i / 64] |= (std::uint64_t{1} << (i % 64));
        }
        return r;
    }

    static bool bit(const Words& w, std::size_t i) {
        return (w[i / 64] >> (i % 64)) & 1u;
    }

    // u, v adjacent within the processed system: no third ray's zero set
    // contains zero(u) & zero(v) & processed.
    bool adjacent(std::size_t ui, std::size_t vi, const Words& common) const {
        for (std::size_t wi = 0; wi < rays.size(); ++wi) {
            if (wi == ui || wi == vi) continue;
            const Ray& w = rays[wi];
            bool contains = true;
            for (std::size_t k = 0; k < words; ++k)
                if (common[k] & ~w.zero[k]) { contains = false; break; }
            if (contains) return false;
        }
        return true;
    }

    void insert(std::size_t row) {
        std::vector<std::size_t> pos, neg_idx;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (bit(rays[i].zero, row)) continue;
            (bit(rays[i].neg, row) ? neg_idx : pos).push_back(i);
        }
        processed[row / 64] |= (std::uint64_t{1} << (row % 64));
        if (neg_idx.empty()) return;  // row already valid for all rays

        // Rank-based necessary condition for adjacency: the common active set
        // must have at least dim - 2 rows.
        const std::size_t need = dim >= 2 ? dim - 2 : 0;

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        Words common(words);
        for (std::size_t p : pos) {
            for (std::size_t n : neg_idx) {
                std::size_t cnt = 0;
                for (std::size_t k = 0; k < words; ++k) {
                    common[k] = rays[p].zero[k] & rays[n].zero[k] & processed[k];
                    cnt += static_cast<std::size_t>(__builtin_popcountll(common[k]));
                }
                if (cnt >= need) pairs.emplace_back(p, n);
            }
        }

        std::vector<Ray> fresh(pairs.size());
        std::vector<char> keep(pairs.size(), 0);
        auto work = [&](std::size_t begin, std::size_t end) {
            Words cw(words);
            for (std::size_t idx = begin; idx < end; ++idx) {
                const auto [p, n] = pairs[idx];
                for (std::size_t k = 0; k < words; ++k)
                    cw[k] = rays[p].zero[k] & rays[n].zero[k] & processed[k];
                if (!adjacent(p, n, cw)) continue;
                const Int sp = dot(rows[row], rays[p].v);
                const Int sn = dot(rows[row], rays[n].v);
                IntVec nv(dim);
                for (std::size_t k = 0; k < dim; ++k)
                    nv[k] = sp * rays[n].v[k] - sn * rays[p].v[k];
                fresh[idx] = make_ray(std::move(nv));
                keep[idx] = 1;
            }
        };
        const int nt = std::max(1, threads);
        if (nt == 1 || pairs.size() < 64) {
            work(0, pairs.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (pairs.size() + nt - 1) / nt;
            for (int t = 0; t < nt; ++t) {
                const std::size_t b = std::min(pairs.size(), t * chunk);
                const std::size_t e = std::min(pairs.size(), b + chunk);
                if (b < e) pool.emplace_back(work, b, e);
            }
            for (auto& th : pool) th.join();
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + (rays.size() - pos.size() - neg_idx.size()) + pairs.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (!bit(rays[i].neg, row) || bit(rays[i].zero, row)) next.push_back(std::move(rays[i]));
        for (std::size_t idx = 0; idx < pairs.size(); ++idx)
            if (keep[idx]) next.push_back(std::move(fresh[idx]));
        rays = std::move(next);
        if (rays.size() > max_rays)
            throw BudgetExceeded("double description ray budget exceeded (" +
                                 std::to_string(rays.size()) + " rays)");
    }

    std::size_t negatives(std::size_t row) const {
        std::size_t c = 0;
        for (const Ray& r : rays)
            if (bit(r.neg, row)) ++c;
        return c;
    }
};

}  // namespace

IntMat extreme_rays(const IntMat& input_rows, const EnumerationBudget& budget) {
    if (input_rows.empty()) throw ValidationError("extreme_rays: no constraints");
    IntMat rows = input_rows;
    for (auto& r : rows) reduce_by_gcd(r);
    const std::size_t dim = rows[0].size();

    // Greedy initial row basis of full rank.
    Mat probe;
    std::vector<std::size_t> basis_rows;
    std::vector<bool> in_basis(rows.size(), false);
    for (std::size_t i = 0; i < rows.size() && basis_rows.size() < dim; ++i) {
        Mat trial = probe;
        trial.emplace_back(rows[i].begin(), rows[i].end());
        if (rank_of(trial) > probe.size()) {
            probe = std::move(trial);
            basis_rows.push_back(i);
            in_basis[i] = true;
        }
    }
    if (basis_rows.size() != dim)
        throw ValidationError("extreme_rays: cone is not pointed");

    int threads = budget.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;

    Sweep sweep(rows, budget.max_rays, threads);

    // Initial rays: columns of the inverse of the basis submatrix.
    Mat square(dim, Vec(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) square[i][j] = Rat(rows[basis_rows[i]][j]);
    const Mat inv = invert(std::move(square));
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = inv[i][j];
        sweep.rays.push_back(sweep.make_ray(scale_to_integers(col)));
    }
    for (std::size_t i : basis_rows) sweep.processed[i / 64] |= (std::uint64_t{1} << (i % 64));

    // Dynamic insertion order: fewest violating rays first, lowest index tie-break.
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!in_basis[i]) pending.push_back(i);
    while (!pending.empty()) {
        std::size_t best = 0, best_neg = SIZE_MAX;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            const std::size_t nn = sweep.negatives(pending[k]);
            if (nn < best_neg) { best_neg = nn; best = k; }
        }
        const std::size_t row = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        sweep.insert(row);
    }

    IntMat out;
    out.reserve(sweep.rays.size());
    for (auto& r : sweep.rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pdp
