#include "rgra/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgra {

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : col) n += c.size();
    return n;
}

void compress(std::vector<SparseMatrix::Entry>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size();) {
        int r = v[i].first;
        long s = 0;
        for (; i < v.size() && v[i].first == r; ++i) s += v[i].second;
        if (s != 0) v[w++] = {r, s};
    }
    v.resize(w);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols, rows);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col[j]) t.col[i].emplace_back(j, v);
    return t;
}

std::vector<std::vector<SparseMatrix::Entry>> SparseMatrix::row_lists() const {
    return transpose().col;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows == o.rows && cols == o.cols && col == o.col;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: dimension mismatch");
    SparseMatrix c(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        std::vector<SparseMatrix::Entry> acc;
        for (const auto& [k, v] : b.col[j])
            for (const auto& [i, w] : a.col[k]) acc.emplace_back(i, v * w);
        compress(acc);
        c.col[j] = std::move(acc);
    }
    return c;
}

std::vector<Q> apply(const SparseMatrix& a, const std::vector<Q>& x) {
    std::vector<Q> y(a.rows, 0);
    for (int j = 0; j < a.cols; ++j) {
        if (x[j] == 0) continue;
        for (const auto& [i, v] : a.col[j]) y[i] += v * x[j];
    }
    return y;
}

}  // namespace rgra
