#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgra/sparse.hpp"

namespace rgra {

inline constexpr std::uint32_t kDefaultPrimes[2] = {1073741789u, 1073741783u};

int rank_mod_p(const SparseMatrix& a, std::uint32_t p);
int rank_q(const SparseMatrix& a);

// Some y with a*y = b, or nothing when b is outside the column span.
std::optional<std::vector<Q>> solve_q(const SparseMatrix& a, const std::vector<Q>& b);
std::optional<std::vector<std::uint32_t>> solve_mod_p(const SparseMatrix& a, const std::vector<Q>& b,
                                                      std::uint32_t p);

// A covector z with z*a = 0 and z.b = 1; it exists exactly when b is not in
// the column span of a and certifies that fact.
std::optional<std::vector<Q>> separating_covector(const SparseMatrix& a, const std::vector<Q>& b);

bool in_column_span_mod_p(const SparseMatrix& a, const std::vector<Q>& b, std::uint32_t p);

// Indices of the candidates kept by a greedy pass in order: a candidate is
// kept when it is independent of the columns of a together with the
// candidates kept before it.
std::vector<int> greedy_independent_modulo(const SparseMatrix& a, const std::vector<std::vector<Q>>& candidates);

// Basis of the kernel of a, one vector per free column, in echelon form
// with respect to the free columns.
std::vector<std::vector<Q>> kernel_q(const SparseMatrix& a);

}  // namespace rgra
