#include "rgra/differential.hpp"

namespace rgra {

void split_vertex_into(const RibbonGraph& g, const std::vector<int>& rot, int start, int len,
                       int new_label, RibbonGraph& out) {
    const int H = g.num_half_edges();
    const int k = static_cast<int>(rot.size());
    const int a = H, b = H + 1;
    out.d = g.d;
    out.tau.assign(g.tau.begin(), g.tau.end());
    out.tau.push_back(b);
    out.tau.push_back(a);
    out.sigma.assign(g.sigma.begin(), g.sigma.end());
    out.sigma.resize(H + 2);
    out.white.assign(g.white.begin(), g.white.end());
    const int old_label = g.white[rot[0]];
    out.white.push_back(old_label);
    out.white.push_back(new_label);

    auto chain = [&](int head, int from, int count) {
        int prev = head;
        for (int i = 0; i < count; ++i) {
            int h = rot[(from + i) % k];
            out.sigma[prev] = h;
            out.white[h] = out.white[head];
            prev = h;
        }
        out.sigma[prev] = head;
    };
    chain(b, start, len);
    chain(a, start + len, k - len);

    out.orientation.edges.assign(g.orientation.edges.begin(), g.orientation.edges.end());
    out.orientation.edges.push_back(a);
    out.orientation.edge_dirs.assign(g.orientation.edge_dirs.begin(), g.orientation.edge_dirs.end());
    out.orientation.edge_dirs.emplace_back(a, b);
    out.orientation.black_order.assign(g.orientation.black_order.begin(), g.orientation.black_order.end());
    if (old_label == 0) {
        // a representative that moved to the new vertex is replaced by a
        for (int& v : out.orientation.black_order)
            for (int i = 0; i < len; ++i)
                if (rot[(start + i) % k] == v) {
                    v = a;
                    break;
                }
    }
    if (new_label == 0) out.orientation.black_order.push_back(b);

    // The corner (h, sigma h) lies on the boundary of h; the new corners
    // continue the old ones at the two cut points.
    out.boundary.assign(g.boundary.begin(), g.boundary.end());
    out.boundary.push_back(g.boundary[rot[((start + len - 1) % k + k) % k]]);
    out.boundary.push_back(g.boundary[rot[((start - 1) % k + k) % k]]);
}

RibbonGraph split_vertex(const RibbonGraph& g, const std::vector<int>& rot, int start, int len,
                         int new_label) {
    RibbonGraph out;
    split_vertex_into(g, rot, start, len, new_label, out);
    return out;
}

namespace {

std::vector<int> rotation_of(const RibbonGraph& g, int h) {
    std::vector<int> r{h};
    for (int x = g.sigma[h]; x != h; x = g.sigma[x]) r.push_back(x);
    return r;
}

}  // namespace

RibbonGraph attach_at_corner(const RibbonGraph& g, int h) {
    auto rot = rotation_of(g, g.sigma[h]);
    return split_vertex(g, rot, 0, 0, 0);
}

FormalSum d_twist(const RibbonGraph& g) {
    FormalSum out;
    for_each_d_term(g, [&](const RibbonGraph& t, int c) { out.add(t, c); });
    return out;
}

FormalSum d_twist(const FormalSum& s) {
    FormalSum out;
    for (const auto& [key, c] : s.terms()) out.add(d_twist(decode(key)), c);
    return out;
}

}  // namespace rgra
