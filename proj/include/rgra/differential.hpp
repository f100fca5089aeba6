#pragma once

#include <vector>

#include "rgra/formal_sum.hpp"

namespace rgra {

// Splits a vertex in two, joined by a new edge. `rot` is the rotation of the
// vertex; the new vertex receives the cyclic arc rot[start], ...,
// rot[start+len-1] preceded by its end of the new edge, the old vertex keeps
// the remaining arc preceded by the other end. The new edge is last in the
// edge order and directed from the old vertex to the new one; a new black
// vertex is last in the black order. Half-edges 2E and 2E+1 are the old and
// new ends of the new edge.
RibbonGraph split_vertex(const RibbonGraph& g, const std::vector<int>& rot, int start, int len,
                         int new_label = 0);
void split_vertex_into(const RibbonGraph& g, const std::vector<int>& rot, int start, int len,
                       int new_label, RibbonGraph& out);

// Attaches a univalent black vertex in the corner (h, sigma(h)).
RibbonGraph attach_at_corner(const RibbonGraph& g, int h);

// Differential of the twisted complex: corner attachments minus white splits
// minus unordered black splits.
FormalSum d_twist(const RibbonGraph& g);

// Calls f(term, coefficient) for every term of d(g) before cancellation.
// The term object is reused between calls.
template <class F>
void for_each_d_term(const RibbonGraph& g, F&& f) {
    thread_local RibbonGraph t;
    std::vector<int> rot;
    const int H = g.num_half_edges();
    std::vector<char> seen(H, 0);
    for (int h0 = 0; h0 < H; ++h0) {
        if (seen[h0]) continue;
        rot.clear();
        int x = h0;
        do {
            seen[x] = 1;
            rot.push_back(x);
            x = g.sigma[x];
        } while (x != h0);
        const int k = static_cast<int>(rot.size());
        const bool black = g.white[h0] == 0;
        // corners of this vertex
        for (int start = 0; start < k; ++start) {
            split_vertex_into(g, rot, start, 0, 0, t);
            f(static_cast<const RibbonGraph&>(t), 1);
        }
        for (int len = 0; len <= k; ++len) {
            for (int start = 0; start < k; ++start) {
                if (black) {
                    // unordered: (start, len) ~ (start + len, k - len)
                    if (2 * len > k) continue;
                    if (2 * len == k && len > 0 && start >= len) continue;
                }
                split_vertex_into(g, rot, start, len, 0, t);
                f(static_cast<const RibbonGraph&>(t), -1);
            }
        }
    }
}

FormalSum d_twist(const FormalSum& s);

}  // namespace rgra
