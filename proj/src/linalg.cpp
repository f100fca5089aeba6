#include "rgra/linalg.hpp"

#include <map>
#include <stdexcept>

#include "rgra/elimination.hpp"

namespace rgra {

namespace {

template <class F>
std::vector<typename Eliminator<F>::Row> rows_of(const F& f, const SparseMatrix& a) {
    std::vector<typename Eliminator<F>::Row> rows(a.rows);
    for (int j = 0; j < a.cols; ++j)
        for (const auto& [i, v] : a.col[j]) {
            auto x = f.from(v);
            if (!F::is_zero(x)) rows[i].emplace_back(j, x);  // entries divisible by p vanish
        }
    return rows;
}

template <class F>
Eliminator<F> augmented(const F& f, const SparseMatrix& a, const std::vector<Q>& b) {
    if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("rhs length mismatch");
    auto rows = rows_of(f, a);
    for (int i = 0; i < a.rows; ++i) {
        auto v = f.from(b[i]);
        if (!F::is_zero(v)) rows[i].emplace_back(a.cols, v);
    }
    Eliminator<F> e(f, a.cols + 1, a.cols, std::move(rows));
    e.run();
    return e;
}

}  // namespace

int rank_mod_p(const SparseMatrix& a, std::uint32_t p) {
    ModP f(p);
    Eliminator<ModP> e(f, a.cols, a.cols, rows_of(f, a));
    e.run();
    return e.rank();
}

int rank_q(const SparseMatrix& a) {
    Rational f;
    Eliminator<Rational> e(f, a.cols, a.cols, rows_of(f, a));
    e.run();
    return e.rank();
}

std::optional<std::vector<Q>> solve_q(const SparseMatrix& a, const std::vector<Q>& b) {
    auto e = augmented(Rational{}, a, b);
    return e.solve(a.cols);
}

std::optional<std::vector<std::uint32_t>> solve_mod_p(const SparseMatrix& a, const std::vector<Q>& b,
                                                      std::uint32_t p) {
    auto e = augmented(ModP(p), a, b);
    return e.solve(a.cols);
}

bool in_column_span_mod_p(const SparseMatrix& a, const std::vector<Q>& b, std::uint32_t p) {
    auto e = augmented(ModP(p), a, b);
    return e.rhs_consistent(a.cols);
}

std::optional<std::vector<Q>> separating_covector(const SparseMatrix& a, const std::vector<Q>& b) {
    // equations: z . a_j = 0 for each column j, and z . b = 1
    using Row = Eliminator<Rational>::Row;
    std::vector<Row> rows(a.cols + 1);
    for (int j = 0; j < a.cols; ++j)
        for (const auto& [i, v] : a.col[j]) rows[j].emplace_back(i, Q(v));
    for (int i = 0; i < a.rows; ++i)
        if (b[i] != 0) rows[a.cols].emplace_back(i, b[i]);
    rows[a.cols].emplace_back(a.rows, Q(1));
    Eliminator<Rational> e(Rational{}, a.rows + 1, a.rows, std::move(rows));
    e.run();
    return e.solve(a.rows);
}

std::vector<int> greedy_independent_modulo(const SparseMatrix& a, const std::vector<std::vector<Q>>& candidates) {
    Rational f;
    auto rows = rows_of(f, a);
    const int K = static_cast<int>(candidates.size());
    for (int k = 0; k < K; ++k) {
        if (static_cast<int>(candidates[k].size()) != a.rows) throw std::invalid_argument("candidate length mismatch");
        for (int i = 0; i < a.rows; ++i)
            if (candidates[k][i] != 0) rows[i].emplace_back(a.cols + k, candidates[k][i]);
    }
    Eliminator<Rational> e(f, a.cols + K, a.cols, std::move(rows));
    e.run();
    // echelon form of the kept residuals, keyed by pivot row
    std::map<int, std::map<int, Q>> echelon;
    std::vector<int> kept;
    for (int k = 0; k < K; ++k) {
        std::map<int, Q> v;
        for (auto& [i, x] : e.residual(a.cols + k)) v.emplace(i, std::move(x));
        for (auto it = echelon.begin(); it != echelon.end() && !v.empty(); ++it) {
            auto hit = v.find(it->first);
            if (hit == v.end()) continue;
            const Q factor = hit->second / it->second.at(it->first);
            for (const auto& [i, x] : it->second) {
                Q& y = v[i];
                y -= factor * x;
                if (y == 0) v.erase(i);
            }
        }
        if (v.empty()) continue;
        kept.push_back(k);
        const int lead = v.begin()->first;
        echelon.emplace(lead, std::move(v));
    }
    return kept;
}

std::vector<std::vector<Q>> kernel_q(const SparseMatrix& a) {
    Rational f;
    Eliminator<Rational> e(f, a.cols, a.cols, rows_of(f, a));
    e.run();
    std::vector<char> is_pivot(a.cols, 0);
    for (auto [r, c] : e.pivots()) is_pivot[c] = 1;
    std::vector<std::vector<Q>> out;
    for (int j = 0; j < a.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Q> y(a.cols, 0);
        y[j] = 1;
        out.push_back(e.back_substitute(std::move(y)));
    }
    return out;
}

}  // namespace rgra
