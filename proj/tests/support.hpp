// Helpers shared by the test binaries: seeded randomness, half-edge
// renumbering and a dense rational rank used as an independent oracle.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rgra/canonical.hpp"
#include "rgra/formal_sum.hpp"
#include "rgra/ribbon_graph.hpp"
#include "rgra/sparse.hpp"

namespace rgra::test {

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(20240601u + salt); }

// The same oriented graph with half-edge h renamed to pos[h].
inline RibbonGraph renumber(const RibbonGraph& g, const std::vector<int>& pos) {
    const int H = g.num_half_edges();
    RibbonGraph r = g;
    for (int h = 0; h < H; ++h) {
        r.tau[pos[h]] = pos[g.tau[h]];
        r.sigma[pos[h]] = pos[g.sigma[h]];
        r.white[pos[h]] = g.white[h];
        r.boundary[pos[h]] = g.boundary[h];
    }
    for (auto& e : r.orientation.edges) e = pos[e];
    for (auto& v : r.orientation.black_order) v = pos[v];
    for (auto& [a, b] : r.orientation.edge_dirs) a = pos[a], b = pos[b];
    return r;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& gen) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), gen);
    return p;
}

// Rank over Q of a dense matrix by plain Gaussian elimination.
inline long dense_rank(std::vector<std::vector<Q>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    long rank = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
            const Q f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Q>> to_dense(const SparseMatrix& m) {
    std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j)
        for (auto [i, v] : m.col[j]) a[i][j] = v;
    return a;
}

}  // namespace rgra::test
