#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rgra/formal_sum.hpp"
#include "rgra/gc.hpp"
#include "rgra/reduce.hpp"

namespace rgra {

// Element of the deformation complex at fixed genus: for each (m, n) a
// coordinate vector in the cohomology of the (sign on boundaries, trivial on
// whites) isotypic part of Tw RGra_0^{>=3}(m, n; g). The Def degree D and
// the graph degree k of block (m, n) satisfy k = D + m - 1.
struct DefElement {
    int g = 0;
    int degree = 0;
    std::map<std::pair<int, int>, std::vector<Q>> blocks;

    bool is_zero() const;
    bool operator==(const DefElement& o) const;
};

enum class DefPart { Bracket, Cobracket, Trio };

// The complex truncated to m + n <= max_legs. Blocks are built on demand
// and kept for the lifetime of the object.
class DefComplex {
public:
    DefComplex(int g, int max_legs, Caps caps = {});

    int genus() const { return g_; }
    int max_legs() const { return max_legs_; }
    static int graph_degree(int m, int def_degree) { return def_degree + m - 1; }

    const IsotypicBlock& block(int m, int n, int def_degree);

    // Sum of coordinates times representatives, as graphs.
    FormalSum lift(const DefElement& x, int m, int n);
    // Coordinates of cocycles given per block; throws if one is not closed.
    DefElement reduce(const std::map<std::pair<int, int>, FormalSum>& chains, int def_degree);
    // Exactness witness in the block, when the chain is exact.
    Reduction reduce_block(const FormalSum& chain, int m, int n, int def_degree);

    // One part of the differential at chain level on a representative:
    //   bracket:   (m, n) -> (m, n + 1)
    //   cobracket: (m, n) -> (m + 1, n)
    //   trio:      (m, n) -> (m + 2, n - 1)
    // Each part is gen o x - (-1)^D x o gen summed over all slots, where
    // gen o x feeds a boundary of x into a white vertex of gen and D is the
    // Def degree of x.
    static FormalSum chain_part(const FormalSum& x, int def_degree, DefPart p);

    DefElement apply(const DefElement& x, DefPart p);
    DefElement differential(const DefElement& x);

    // Targets dropped because m + n exceeds the truncation.
    const std::vector<std::pair<int, int>>& truncated() const { return truncated_; }

private:
    int g_;
    int max_legs_;
    Caps caps_;
    std::map<std::tuple<int, int, int>, std::unique_ptr<IsotypicBlock>> cache_;
    std::vector<std::pair<int, int>> truncated_;
};

DefElement operator+(const DefElement& a, const DefElement& b);

// Theorem C desk check: the alternating square through F_q, phi and the
// reduction, in genus 1 with m + n <= 4.
struct TheoremCReport {
    std::vector<FqTerm> fq_terms[3];  // (2,2), (3,1), (4,0)
    DefElement element;
    // delta of the element inside the truncation (targets with m + n <= 4).
    bool cocycle_in_truncation = false;
    std::vector<std::pair<int, int>> delta_targets_outside;
    // The (4,0) block as a chain equals the projected phi(gamma_2).
    bool theta_theta_block = false;
    // The projected theta-theta chain is exact in the isotypic complex.
    bool theta_theta_class_zero = false;
    // Every Def degree D - 1 block inside the truncation, with its
    // cohomology dimension; all zero means no preimage exists.
    std::vector<std::pair<std::pair<int, int>, long>> preimage_blocks;
    bool not_exact = false;
};

TheoremCReport check_theorem_c();

}  // namespace rgra
