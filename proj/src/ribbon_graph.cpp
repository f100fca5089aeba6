#include "rgra/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rgra {

std::string Signature::str() const {
    return "d=" + std::to_string(d) + " (m,n,g)=(" + std::to_string(m) + "," + std::to_string(n) +
           "," + std::to_string(g) + ") deg=" + std::to_string(degree);
}

int degree_of(int d, int edges, int black) { return (1 - d) * edges + d * black; }

std::vector<int> inverse(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
}

namespace {

std::vector<std::vector<int>> orbits(int H, const auto& step) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(H, 0);
    for (int h = 0; h < H; ++h) {
        if (seen[h]) continue;
        std::vector<int> cyc;
        int x = h;
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = step(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> vertex_cycles(const RibbonGraph& g) {
    return orbits(g.num_half_edges(), [&](int h) { return g.sigma[h]; });
}

std::vector<std::vector<int>> boundary_cycles(const RibbonGraph& g) {
    auto inv = inverse(g.sigma);
    return orbits(g.num_half_edges(), [&](int h) { return inv[g.tau[h]]; });
}

int beta(const RibbonGraph& g, int h) {
    int t = g.tau[h];
    int x = t;
    while (g.sigma[x] != t) x = g.sigma[x];
    return x;
}

GraphMetrics metrics(const RibbonGraph& g) {
    GraphMetrics m;
    m.edges = g.num_edges();
    for (const auto& v : vertex_cycles(g)) {
        if (g.white[v[0]] == 0) ++m.black; else ++m.white;
    }
    m.boundaries = static_cast<int>(boundary_cycles(g).size());
    int V = m.black + m.white;
    m.genus = (2 - V + m.edges - m.boundaries) / 2;
    m.degree = degree_of(g.d, m.edges, m.black);
    return m;
}

Signature signature(const RibbonGraph& g) {
    auto mt = metrics(g);
    return Signature{g.d, mt.boundaries, mt.white, mt.genus, mt.degree};
}

Orientation default_orientation(const RibbonGraph& g) {
    Orientation o;
    const int H = g.num_half_edges();
    std::vector<char> seen(H, 0);
    for (int h = 0; h < H; ++h) {
        if (seen[h]) continue;
        seen[h] = seen[g.tau[h]] = 1;
        o.edges.push_back(h);
        o.edge_dirs.emplace_back(h, g.tau[h]);
    }
    for (const auto& v : vertex_cycles(g))
        if (g.white[v[0]] == 0) o.black_order.push_back(v[0]);
    return o;
}

ValidationReport validate(const RibbonGraph& g, Regime regime) {
    ValidationReport r;
    auto fail = [&](std::string s) {
        r.ok = false;
        r.problems.push_back(std::move(s));
    };
    const int H = g.num_half_edges();
    if (static_cast<int>(g.sigma.size()) != H || static_cast<int>(g.white.size()) != H ||
        static_cast<int>(g.boundary.size()) != H) {
        fail("array sizes disagree");
        return r;
    }
    if (H % 2 != 0) fail("odd number of half-edges");
    for (int h = 0; h < H; ++h) {
        int t = g.tau[h];
        if (t < 0 || t >= H || t == h || g.tau[t] != h) {
            fail("tau is not a fixed-point-free involution at " + std::to_string(h));
            return r;
        }
    }
    {
        std::vector<int> s = g.sigma;
        std::sort(s.begin(), s.end());
        for (int h = 0; h < H; ++h)
            if (s[h] != h) {
                fail("sigma is not a permutation");
                return r;
            }
    }
    if (H == 0) {
        fail("graph has no edges");
        return r;
    }

    // connectivity
    std::vector<char> seen(H, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int x : {g.tau[h], g.sigma[h]})
            if (!seen[x]) {
                seen[x] = 1;
                ++count;
                stack.push_back(x);
            }
    }
    if (count != H) fail("graph is disconnected");

    auto verts = vertex_cycles(g);
    std::set<int> wl;
    int n = 0;
    for (const auto& v : verts) {
        int lab = g.white[v[0]];
        for (int h : v)
            if (g.white[h] != lab) fail("white label not constant on a vertex");
        int val = static_cast<int>(v.size());
        if (lab == 0) {
            int need = regime == Regime::AtLeastThree ? 3 : 1;
            if (val < need) fail("black vertex of valence " + std::to_string(val));
        } else {
            ++n;
            if (lab < 0 || !wl.insert(lab).second) fail("duplicate or negative white label");
        }
    }
    for (int i = 1; i <= n; ++i)
        if (!wl.count(i)) fail("white labels are not 1..n");

    auto bnds = boundary_cycles(g);
    std::set<int> bl;
    for (const auto& b : bnds) {
        int lab = g.boundary[b[0]];
        for (int h : b)
            if (g.boundary[h] != lab) fail("boundary label not constant on a cycle");
        if (lab <= 0 || !bl.insert(lab).second) fail("duplicate or non-positive boundary label");
    }
    for (int i = 1; i <= static_cast<int>(bnds.size()); ++i)
        if (!bl.count(i)) fail("boundary labels are not 1..m");

    const auto& o = g.orientation;
    const int E = H / 2;
    if (!g.odd()) {
        std::set<int> es;
        for (int h : o.edges) {
            if (h < 0 || h >= H) { fail("orientation names an invalid half-edge"); continue; }
            es.insert(std::min(h, g.tau[h]));
        }
        if (static_cast<int>(o.edges.size()) != E || static_cast<int>(es.size()) != E)
            fail("edge order is not a total order of the edges");
    } else {
        std::vector<int> vid(H);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (int h : verts[i]) vid[h] = static_cast<int>(i);
        std::set<int> bs;
        int nb = 0;
        for (const auto& v : verts)
            if (g.white[v[0]] == 0) ++nb;
        for (int h : o.black_order) {
            if (h < 0 || h >= H || g.white[h] != 0) { fail("black order names a non-black vertex"); continue; }
            bs.insert(vid[h]);
        }
        if (static_cast<int>(o.black_order.size()) != nb || static_cast<int>(bs.size()) != nb)
            fail("black order is not a total order of the black vertices");
        std::set<int> es;
        for (auto [a, b] : o.edge_dirs) {
            if (a < 0 || a >= H || g.tau[a] != b) { fail("edge direction is not an edge"); continue; }
            es.insert(std::min(a, b));
        }
        if (static_cast<int>(o.edge_dirs.size()) != E || static_cast<int>(es.size()) != E)
            fail("edge directions do not cover every edge once");
    }
    return r;
}

RibbonGraph relabel_whites(const RibbonGraph& g, const std::vector<int>& perm) {
    RibbonGraph out = g;
    for (auto& w : out.white)
        if (w > 0) w = perm.at(w);
    return out;
}

RibbonGraph relabel_boundaries(const RibbonGraph& g, const std::vector<int>& perm) {
    RibbonGraph out = g;
    for (auto& b : out.boundary) b = perm.at(b);
    return out;
}

RibbonGraph build_graph(int d, const std::vector<VertexSpec>& vertices,
                        const std::vector<std::pair<int, int>>& edges,
                        const std::map<int, int>& boundary_label_of_name) {
    std::map<int, int> idx;
    for (const auto& [a, b] : edges) {
        if (idx.count(a) || idx.count(b)) throw std::invalid_argument("half-edge used twice");
        int k = static_cast<int>(idx.size());
        idx[a] = k;
        idx[b] = k + 1;
    }
    RibbonGraph g;
    g.d = d;
    const int H = static_cast<int>(idx.size());
    g.tau.resize(H);
    g.sigma.assign(H, -1);
    g.white.assign(H, 0);
    for (int k = 0; k < H; k += 2) {
        g.tau[k] = k + 1;
        g.tau[k + 1] = k;
    }
    for (const auto& v : vertices) {
        const int k = static_cast<int>(v.half_edges.size());
        for (int i = 0; i < k; ++i) {
            int h = idx.at(v.half_edges[i]);
            if (g.sigma[h] != -1) throw std::invalid_argument("half-edge at two vertices");
            g.sigma[h] = idx.at(v.half_edges[(i + 1) % k]);
            g.white[h] = v.label;
        }
        if (v.label == 0 && k > 0) g.orientation.black_order.push_back(idx.at(v.half_edges[0]));
    }
    for (int h = 0; h < H; ++h)
        if (g.sigma[h] == -1) throw std::invalid_argument("half-edge at no vertex");
    for (int k = 0; k < H; k += 2) {
        g.orientation.edges.push_back(k);
        g.orientation.edge_dirs.emplace_back(k, k + 1);
    }
    std::vector<int> lab(H, 0);
    for (const auto& [name, l] : boundary_label_of_name) lab[idx.at(name)] = l;
    relabel_boundary_cycles(g, [&](int h) { return lab[h]; });
    return g;
}

}  // namespace rgra
