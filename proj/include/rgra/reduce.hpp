#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgra/basis.hpp"
#include "rgra/formal_sum.hpp"
#include "rgra/properad.hpp"
#include "rgra/sparse.hpp"
#include "rgra/symmetric.hpp"

namespace rgra {

// Cohomology of one degree of a complex given by the differentials into and
// out of it. The representatives are the earliest kernel vectors (in the
// echelon order of the kernel basis) that complete the image to the kernel,
// scaled to primitive integer vectors.
struct CohomologyBasisData {
    int chain_dim = 0;
    long rank_in = 0;
    long rank_out = 0;
    std::vector<std::vector<Q>> reps;

    long dimension() const { return static_cast<long>(reps.size()); }
};

CohomologyBasisData cohomology_basis(const SparseMatrix& d_in, const SparseMatrix& d_out);

// Outcome of writing a cochain x as sum_i c_i rep_i + d(y).
//
// Method "rational": coordinates and witness are exact over Q.
// Method "modular": only nonvanishing is certified. The argument runs over
// Z/p: d_in d_prev = 0 exactly, H^(k-1) = 0 mod p forces rank_Q d_in =
// rank_p d_in, and x lies outside the span of d_in mod p, hence over Q.
struct Reduction {
    bool cocycle = false;
    std::vector<Q> coboundary;  // d(x) when x is not a cocycle
    std::string method;
    std::vector<Q> coordinates;  // empty for the modular method
    bool exact = false;
    bool nonzero = false;
    std::optional<std::vector<Q>> witness;  // y with d(y) = x - sum c_i rep_i

    long rank_in = 0;
    long rank_prev = 0;
    std::uint32_t prime = 0;
};

Reduction reduce(const CohomologyBasisData& h, const SparseMatrix& d_in, const SparseMatrix& d_out,
                 const std::vector<Q>& x);

// Nonvanishing certificate mod p for a cocycle x; d_prev maps into the
// source of d_in. Returns nothing when H^(k-1) mod p does not vanish, in
// which case the argument does not apply.
std::optional<Reduction> reduce_modular(const SparseMatrix& d_prev, const SparseMatrix& d_in,
                                        const std::vector<Q>& x, std::uint32_t prime);

struct ReduceOptions {
    // Blocks with more basis elements use the modular certificate.
    std::size_t max_rational = 20000;
    std::uint32_t prime = 1073741789u;
    Caps caps;
};

// Graph-level reduction in one graded piece. With characters set, the
// reduction takes place in the isotypic part and x is projected first.
struct GraphReduction {
    Signature sig;
    Regime regime = Regime::AtLeastThree;
    bool symmetrized = false;
    Character boundaries = Character::Trivial;
    Character whites = Character::Trivial;
    Reduction r;
    FormalSum residual;  // d(x) as graphs when x is not a cocycle
    FormalSum witness;   // as graphs, when available
    std::vector<FormalSum> reps;
};

struct NotACocycle : std::runtime_error {
    FormalSum residual;
    NotACocycle(const std::string& what, FormalSum res) : std::runtime_error(what), residual(std::move(res)) {}
};

// Throws NotACocycle with d(x) when x is not closed.
GraphReduction reduce_to_cohomology(const FormalSum& x, Regime regime = Regime::AtLeastThree,
                                    const ReduceOptions& opt = {});
GraphReduction reduce_to_cohomology(const FormalSum& x, Character boundaries, Character whites,
                                    Regime regime = Regime::AtLeastThree, const ReduceOptions& opt = {});

// Isotypic complex around one degree, kept for repeated reductions.
struct IsotypicBlock {
    Signature sig;
    Regime regime = Regime::AtLeastThree;
    OrbitBasis prev, cur, next;
    SparseMatrix d_in, d_out;
    CohomologyBasisData h;
};

IsotypicBlock isotypic_block(const Signature& sig, Character boundaries, Character whites,
                             Regime regime = Regime::AtLeastThree, const Caps& caps = {});

// Coordinates of the projection of x in h's representatives, or the
// witness when x is exact.
Reduction reduce(const IsotypicBlock& b, const FormalSum& x);

}  // namespace rgra
