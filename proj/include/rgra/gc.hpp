#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rgra/formal_sum.hpp"
#include "rgra/properad.hpp"

namespace rgra {

// A connected graph without loops or multiple edges, for the Kontsevich
// complexes. Vertices have degree d, edges degree 1 - d.
//
// Orientation: for even d, the order of the edges. For odd d, the order of
// the vertices together with the listed direction of every edge. In a
// directed graph the directions are data rather than orientation, so for odd
// d only the vertex order remains.
struct OrdinaryGraph {
    int d = 0;
    bool directed = false;
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    int degree() const { return d * (vertices - 1) + (1 - d) * static_cast<int>(edges.size()); }
    std::vector<int> valences() const;
    bool has_directed_cycle() const;
    bool connected() const;
};

// Canonical representative; the graph equals sign * decode(key), and zero
// is set when an automorphism reverses the orientation.
struct OrdinaryForm {
    std::string key;
    int sign = 1;
    bool zero = false;
};

OrdinaryForm canonicalize(const OrdinaryGraph& g);
OrdinaryGraph decode_ordinary(const std::string& key, int d, bool directed);

// Linear combination of canonical graphs of one kind.
struct GCSum {
    int d = 0;
    bool directed = false;
    std::map<std::string, Q> terms;

    void add(const OrdinaryGraph& g, const Q& c);
    bool empty() const { return terms.empty(); }
};

// Vertex splitting: every vertex is split in two along every division of
// its edges into two nonempty parts, joined by a new edge that goes last in
// the order (and, for odd d, from the old vertex to the new one, which goes
// last among the vertices). Splits that leave a univalent vertex cancel
// against the univalent attachments of the twisted differential and are
// omitted. For undirected graphs each unordered division is taken once.
GCSum gc_differential(const OrdinaryGraph& g);
GCSum gc_differential(const GCSum& s);

// The polytope classes: the triangle (undirected, odd d) and the directed
// 4-cycle with alternating directions (d = 0): 0 -> 1 <- 2 -> 3 <- 0.
OrdinaryGraph triangle(int d = 1);
OrdinaryGraph alternating_square();

// All connected simple graphs up to isomorphism with the given vertex and
// edge bounds; with `directed`, every direction pattern of each.
std::vector<OrdinaryGraph> all_graphs(int max_vertices, int max_edges, int d, bool directed = false);

// Terms of F_q(g): m out-legs and n in-legs attached to the vertices. A
// vertex with a outgoing and b incoming half-edges (legs included) must be
// of type (3,0), (2,1) or (1,2), the types carried by the three generators;
// every other type, in particular valence <= 2 and the sinks (0, k), is
// killed. Legs are unlabeled: each term records how many legs of each kind
// sit at each vertex, and terms related by an automorphism of g are merged.
struct FqTerm {
    std::vector<std::pair<int, int>> legs;  // (out, in) legs per vertex
    long coefficient = 0;
};

struct FqError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<FqTerm> fq_image(const OrdinaryGraph& g, int m, int n);

// The decorated graph that phi evaluates for one term. Vertices carry the
// generator representatives; global outputs and inputs are numbered in
// vertex order.
DecoratedGraph fq_decorated(const OrdinaryGraph& g, const FqTerm& t);

}  // namespace rgra
