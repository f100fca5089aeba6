#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rgra/formal_sum.hpp"

namespace rgra {

struct CompositionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Substitutes boundary j of `inner` into white vertex i of `outer`. The
// half-edges of the white vertex are redistributed over the corners of the
// boundary in every way compatible with both cyclic orders.
//
// Labels of the result: outer whites a < i keep their label, inner whites b
// become i - 1 + b, outer whites a > i become a + n_inner - 1. Outer
// boundaries keep their labels (a merged boundary takes the outer label),
// inner boundaries other than j follow as m_outer + 1, ... in label order.
// Orientation: outer edges then inner edges (for odd d, outer black vertices
// then inner ones).
FormalSum compose(const RibbonGraph& outer, int i, const RibbonGraph& inner, int j);
FormalSum compose(const FormalSum& outer, int i, const FormalSum& inner, int j);

// Relabels every term. Permutations are 1-based maps old -> new; an empty
// vector means the identity.
FormalSum relabel(const FormalSum& s, const std::vector<int>& white_perm,
                  const std::vector<int>& boundary_perm);

enum class Character { Trivial, Sign };

// Average over relabelings of boundaries and white vertices, each weighted
// by the chosen character of the permutation.
FormalSum symmetrize(const FormalSum& s, Character boundaries, Character whites);

// Cocycle representatives of the three generators.
// bracket: one edge between white vertices 1 and 2 (one boundary).
// cobracket: white 1 joined to a black vertex carrying a loop; skew in the
//   two boundaries.
// trio: theta graph on two black vertices; skew in the three boundaries.
FormalSum bracket_rep(int d = 0);
FormalSum cobracket_rep(int d = 0);
FormalSum trio_rep(int d = 0);

// A directed graph whose vertices are decorated by formal sums. An edge
// feeds boundary `out` of vertex `from` into white vertex `in` of vertex `to`.
struct DecoratedGraph {
    struct Edge {
        int from = 0, out = 0;
        int to = 0, in = 0;
    };
    struct Leg {
        int vertex = 0, slot = 0;
    };
    std::vector<FormalSum> vertices;
    std::vector<Edge> edges;
    // Global output legs (boundaries) and input legs (white vertices) in
    // label order.
    std::vector<Leg> outputs;
    std::vector<Leg> inputs;

    int loop_number() const {
        return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
    }
};

// Throws CompositionError if `g` has a directed cycle, is disconnected, or
// its legs do not match the decorations.
void check_decorated(const DecoratedGraph& g);

// Composition along the graph. Edges are processed in `edge_order`
// (default: as listed); the result does not depend on the order.
FormalSum phi(const DecoratedGraph& g, const std::vector<int>& edge_order = {});

// The cyclic chain of 2k trios and 2k brackets; k = 1 gives four outputs.
DecoratedGraph gamma_family(int k, int d = 0);

}  // namespace rgra
