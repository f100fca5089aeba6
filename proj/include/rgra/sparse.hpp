#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace rgra {

using Q = mpq_class;

// Sparse integer matrix stored by columns; entries within a column are kept
// sorted by row and nonzero.
struct SparseMatrix {
    using Entry = std::pair<int, long>;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Entry>> col;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}

    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }
    SparseMatrix transpose() const;
    // Row-major view of the same entries.
    std::vector<std::vector<Entry>> row_lists() const;
    bool operator==(const SparseMatrix& o) const;
};

// Sorts entries of each column, merging duplicates and dropping zeros.
void compress(std::vector<SparseMatrix::Entry>& v);

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

std::vector<Q> apply(const SparseMatrix& a, const std::vector<Q>& x);

}  // namespace rgra
