#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rgra {

// Which black vertices are admitted: valence >= 3, or valence >= 1.
enum class Regime { AtLeastThree, Full };

// Orientation datum. For even d only `edges` is used: a total order of the
// edges, each edge named by either of its half-edges. For odd d the datum is
// an order of the black vertices (one half-edge per vertex) together with a
// direction (tail, head) for every edge.
struct Orientation {
    std::vector<int> edges;
    std::vector<int> black_order;
    std::vector<std::pair<int, int>> edge_dirs;
};

// A connected ribbon graph on half-edges 0..2E-1.
//
// tau is a fixed-point-free involution, sigma the counterclockwise successor
// at a vertex. Vertex and boundary data are stored per half-edge: white[h] is
// the label of the vertex of h (0 for black), boundary[h] the label of the
// boundary cycle of h. Boundary cycles are the orbits of sigma^-1 o tau, and
// the corner (h, sigma(h)) lies on the boundary of h.
struct RibbonGraph {
    int d = 0;
    std::vector<int> tau;
    std::vector<int> sigma;
    std::vector<int> white;
    std::vector<int> boundary;
    Orientation orientation;

    int num_half_edges() const { return static_cast<int>(tau.size()); }
    int num_edges() const { return static_cast<int>(tau.size()) / 2; }
    bool odd() const { return (d % 2) != 0; }
};

struct GraphMetrics {
    int edges = 0;
    int black = 0;
    int white = 0;
    int boundaries = 0;
    int genus = 0;
    int degree = 0;
};

struct Signature {
    int d = 0;
    int m = 0;  // boundaries (outputs)
    int n = 0;  // white vertices (inputs)
    int g = 0;
    int degree = 0;

    auto operator<=>(const Signature&) const = default;
    int num_edges() const { return degree + d * (2 * g - 2 + m + n); }
    std::string str() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

int degree_of(int d, int edges, int black);

std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g);
std::vector<std::vector<int>> boundary_cycles(const RibbonGraph& g);
std::vector<int> inverse(const std::vector<int>& perm);
int beta(const RibbonGraph& g, int h);

GraphMetrics metrics(const RibbonGraph& g);
Signature signature(const RibbonGraph& g);
ValidationReport validate(const RibbonGraph& g, Regime regime = Regime::Full);

// Orientation datum whose induced order follows half-edge numbering.
Orientation default_orientation(const RibbonGraph& g);

// Recomputes boundary[] from sigma and tau, taking each cycle's label from
// `label_of(h)` for the first half-edge h of the cycle with label_of(h) > 0.
template <class F>
void relabel_boundary_cycles(RibbonGraph& g, F&& label_of);

// Permutations are 1-based maps old label -> new label (index 0 unused).
RibbonGraph relabel_whites(const RibbonGraph& g, const std::vector<int>& perm);
RibbonGraph relabel_boundaries(const RibbonGraph& g, const std::vector<int>& perm);

// Builds a graph from vertex rotations. Each vertex lists the names of its
// half-edges counterclockwise; names are arbitrary distinct ints. `edges`
// pairs names in orientation order (and in direction, for odd d). Black
// vertices are ordered as they appear in `vertices`. Boundary labels are
// given by one named half-edge per boundary cycle.
struct VertexSpec {
    int label = 0;
    std::vector<int> half_edges;
};
RibbonGraph build_graph(int d, const std::vector<VertexSpec>& vertices,
                        const std::vector<std::pair<int, int>>& edges,
                        const std::map<int, int>& boundary_label_of_name);

template <class F>
void relabel_boundary_cycles(RibbonGraph& g, F&& label_of) {
    const int H = g.num_half_edges();
    g.boundary.assign(H, 0);
    for (const auto& cyc : boundary_cycles(g)) {
        int lab = 0;
        for (int h : cyc) {
            if (int l = label_of(h); l > 0) { lab = l; break; }
        }
        for (int h : cyc) g.boundary[h] = lab;
    }
}

}  // namespace rgra
