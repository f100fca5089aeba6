#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rgra/basis.hpp"
#include "rgra/formal_sum.hpp"
#include "rgra/sparse.hpp"

namespace rgra {

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix of d from span(src) to span(tgt): column j holds d(src[j]).
// Throws InvariantViolation if a surviving term falls outside tgt.
SparseMatrix assemble(const Basis& src, const Basis& tgt);

// Coordinates of a formal sum in a basis; throws if a term is missing.
std::vector<Q> coordinates(const FormalSum& s, const Basis& b);
FormalSum from_coordinates(const std::vector<Q>& x, const Basis& b);

struct RankOptions {
    std::vector<std::uint32_t> primes{1073741789u, 1073741783u};
    // Also compute ranks over Q and require agreement.
    bool certify = false;
    Caps caps;
};

struct CohomologyEntry {
    Signature sig;
    long basis = 0;
    long rank_in = 0;   // rank of d into this degree
    long rank_out = 0;  // rank of d out of this degree
    long dimension = 0;
    bool verified = false;  // ranks certified over Q
};

// Rank of d from degree k to k+1 with the given signature; cached per run.
long differential_rank(const Signature& source, Regime regime, const RankOptions& opt, bool* verified);

std::vector<CohomologyEntry> cohomology(int d, int m, int n, int g, Regime regime, int deg_lo, int deg_hi,
                                        const RankOptions& opt = {});

// Degree range where the valence >= 3 complex can be nonzero.
std::pair<int, int> degree_range(int d, int m, int n, int g, Regime regime, int max_edges);

}  // namespace rgra
