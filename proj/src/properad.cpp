#include "rgra/properad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "rgra/canonical.hpp"

namespace rgra {

namespace {

using Terms = std::vector<std::pair<RibbonGraph, Q>>;

int max_white(const RibbonGraph& g) {
    int n = 0;
    for (int w : g.white) n = std::max(n, w);
    return n;
}

int max_boundary(const RibbonGraph& g) {
    int m = 0;
    for (int b : g.boundary) m = std::max(m, b);
    return m;
}

// Disjoint union; labels are taken as they are.
RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.d != b.d) throw CompositionError("compose: d mismatch");
    RibbonGraph u = a;
    const int off = a.num_half_edges();
    for (int h = 0; h < b.num_half_edges(); ++h) {
        u.tau.push_back(b.tau[h] + off);
        u.sigma.push_back(b.sigma[h] + off);
        u.white.push_back(b.white[h]);
        u.boundary.push_back(b.boundary[h]);
    }
    for (int e : b.orientation.edges) u.orientation.edges.push_back(e + off);
    for (int v : b.orientation.black_order) u.orientation.black_order.push_back(v + off);
    for (auto [x, y] : b.orientation.edge_dirs) u.orientation.edge_dirs.emplace_back(x + off, y + off);
    return u;
}

// Recomputes boundary labels after a gluing that consumed boundary `gone`:
// every new cycle keeps the one surviving label it contains.
void relabel_after_glue(RibbonGraph& g, int gone) {
    const int H = g.num_half_edges();
    const std::vector<int> old = g.boundary;
    const std::vector<int> sinv = inverse(g.sigma);
    std::vector<char> seen(H, 0);
    std::vector<int> cyc;
    for (int h0 = 0; h0 < H; ++h0) {
        if (seen[h0]) continue;
        int lab = 0, x = h0;
        cyc.clear();
        do {
            seen[x] = 1;
            cyc.push_back(x);
            if (old[x] != gone) {
                if (lab != 0 && lab != old[x]) throw CompositionError("compose: boundary labels collide");
                lab = old[x];
            }
            x = sinv[g.tau[x]];
        } while (x != h0);
        if (lab == 0) throw CompositionError("compose: boundary left unlabeled");
        for (int y : cyc) g.boundary[y] = lab;
    }
}

// Removes white vertex `w` and boundary `b`, reattaching the half-edges of w
// to the corners of b in all cyclically compatible ways. Labels of other
// vertices and boundaries are untouched.
template <class F>
void glue(const RibbonGraph& g, int w, int b, F&& emit) {
    const int H = g.num_half_edges();
    int h1 = -1, c0 = -1;
    for (int h = 0; h < H; ++h) {
        if (h1 < 0 && g.white[h] == w) h1 = h;
        if (c0 < 0 && g.boundary[h] == b) c0 = h;
    }
    if (h1 < 0) throw CompositionError("compose: no white vertex " + std::to_string(w));
    if (c0 < 0) throw CompositionError("compose: no boundary " + std::to_string(b));
    std::vector<int> stubs;
    for (int x = h1;;) {
        stubs.push_back(x);
        x = g.sigma[x];
        if (x == h1) break;
    }
    // Corners of b in the direction opposite to the boundary walk; this is
    // the order in which the gluing meets them when going around w
    // clockwise.
    std::vector<int> corners;
    for (int x = c0;;) {
        if (g.white[x] == w) throw CompositionError("compose: boundary passes through the substituted vertex");
        corners.push_back(x);
        x = g.tau[g.sigma[x]];
        if (x == c0) break;
    }
    const int k = static_cast<int>(stubs.size());
    const int L = static_cast<int>(corners.size());
    std::vector<int> t(k);
    RibbonGraph out;
    std::vector<std::vector<int>> at(L);
    for (int s = 0; s < k; ++s) {
        std::fill(t.begin(), t.end(), 0);
        while (true) {
            for (auto& v : at) v.clear();
            for (int a = 0; a < k; ++a) at[t[a]].push_back(stubs[(s + a) % k]);
            out = g;
            for (int c = 0; c < L; ++c) {
                if (at[c].empty()) continue;
                int h = corners[c];
                int next = g.sigma[h];
                int prev = h;
                for (int x : at[c]) {
                    out.sigma[prev] = x;
                    out.white[x] = g.white[h];
                    prev = x;
                }
                out.sigma[prev] = next;
            }
            relabel_after_glue(out, b);
            emit(out);
            // next non-decreasing sequence
            int a = k - 1;
            while (a >= 0 && t[a] == L - 1) --a;
            if (a < 0) break;
            int v = t[a] + 1;
            for (int q = a; q < k; ++q) t[q] = v;
        }
    }
}

}  // namespace

FormalSum compose(const RibbonGraph& outer, int i, const RibbonGraph& inner, int j) {
    if (outer.d != inner.d) throw CompositionError("compose: d mismatch");
    const int nx = max_white(outer), mx = max_boundary(outer);
    const int ny = max_white(inner), my = max_boundary(inner);
    if (i < 1 || i > nx) throw CompositionError("compose: white vertex index out of range");
    if (j < 1 || j > my) throw CompositionError("compose: boundary index out of range");
    const int wtmp = nx + ny + 1, btmp = mx + my + 1;
    RibbonGraph x = outer, y = inner;
    for (int& a : x.white)
        if (a == i) a = wtmp;
        else if (a > i) a += ny - 1;
    for (int& b : y.white)
        if (b > 0) b += i - 1;
    for (int& b : y.boundary) b = b == j ? btmp : mx + (b < j ? b : b - 1);
    RibbonGraph u = disjoint_union(x, y);
    FormalSum out;
    glue(u, wtmp, btmp, [&](const RibbonGraph& t) { out.add(t, 1); });
    return out;
}

FormalSum compose(const FormalSum& outer, int i, const FormalSum& inner, int j) {
    FormalSum out;
    for (const auto& [kx, cx] : outer.terms()) {
        RibbonGraph x = decode(kx);
        for (const auto& [ky, cy] : inner.terms()) out.add(compose(x, i, decode(ky), j), cx * cy);
    }
    return out;
}

FormalSum relabel(const FormalSum& s, const std::vector<int>& white_perm,
                  const std::vector<int>& boundary_perm) {
    FormalSum out;
    for (const auto& [k, c] : s.terms()) {
        RibbonGraph g = decode(k);
        if (!white_perm.empty()) g = relabel_whites(g, white_perm);
        if (!boundary_perm.empty()) g = relabel_boundaries(g, boundary_perm);
        out.add(g, c);
    }
    return out;
}

namespace {

int perm_sign_1based(const std::vector<int>& p) {
    return permutation_parity(std::vector<int>(p.begin() + 1, p.end()));
}

}  // namespace

FormalSum symmetrize(const FormalSum& s, Character boundaries, Character whites) {
    if (s.empty()) return s;
    const Signature sig = *s.signature();
    std::vector<int> pm(sig.m + 1), pn(sig.n + 1);
    std::iota(pm.begin(), pm.end(), 0);
    std::iota(pn.begin(), pn.end(), 0);
    FormalSum out;
    long count = 0;
    do {
        int sm = boundaries == Character::Sign ? perm_sign_1based(pm) : 1;
        std::iota(pn.begin(), pn.end(), 0);
        do {
            int sn = whites == Character::Sign ? perm_sign_1based(pn) : 1;
            out.add(relabel(s, pn, pm), Q(sm * sn));
            ++count;
        } while (std::next_permutation(pn.begin() + 1, pn.end()));
    } while (std::next_permutation(pm.begin() + 1, pm.end()));
    out *= Q(1, count);
    return out;
}

FormalSum bracket_rep(int d) {
    RibbonGraph g = build_graph(d, {{1, {0}}, {2, {1}}}, {{0, 1}}, {{0, 1}});
    return FormalSum(g);
}

FormalSum cobracket_rep(int d) {
    // names: s1 = 0 (at white 1), s2 = 1, loop l1 = 2, l2 = 3
    std::vector<VertexSpec> vs{{1, {0}}, {0, {1, 2, 3}}};
    std::vector<std::pair<int, int>> es{{0, 1}, {2, 3}};
    RibbonGraph a = build_graph(d, vs, es, {{2, 1}, {0, 2}});
    RibbonGraph b = build_graph(d, vs, es, {{2, 2}, {0, 1}});
    FormalSum s;
    s.add(a, Q(1, 2));
    s.add(b, Q(-1, 2));
    return s;
}

FormalSum trio_rep(int d) {
    // Theta graph: C (bottom) with rotation R, M, L and A (top) with
    // rotation L, M, R; edges directed from C to A and oriented R, M, L.
    // This orientation makes trio-into-cobracket agree with its drawn form.
    enum { LC, MC, RC, LA, MA, RA };
    std::vector<VertexSpec> vs{{0, {RC, MC, LC}}, {0, {LA, MA, RA}}};
    std::vector<std::pair<int, int>> es{{RC, RA}, {MC, MA}, {LC, LA}};
    RibbonGraph t = build_graph(d, vs, es, {{MC, 1}, {RC, 2}, {LC, 3}});
    RibbonGraph t2 = build_graph(d, vs, es, {{MC, 2}, {RC, 1}, {LC, 3}});
    FormalSum s;
    s.add(t, Q(-1, 2));
    s.add(t2, Q(1, 2));
    return s;
}

void check_decorated(const DecoratedGraph& g) {
    const int V = static_cast<int>(g.vertices.size());
    if (V == 0) throw CompositionError("phi: empty graph");
    std::vector<Signature> sig(V);
    for (int v = 0; v < V; ++v) {
        if (g.vertices[v].empty() || !g.vertices[v].signature())
            throw CompositionError("phi: vertex " + std::to_string(v) + " has no decoration");
        sig[v] = *g.vertices[v].signature();
    }
    std::vector<std::vector<int>> used_out(V), used_in(V);
    for (int v = 0; v < V; ++v) {
        used_out[v].assign(sig[v].m + 1, 0);
        used_in[v].assign(sig[v].n + 1, 0);
    }
    auto mark = [&](std::vector<std::vector<int>>& used, int v, int slot, const char* what) {
        if (v < 0 || v >= V) throw CompositionError("phi: vertex index out of range");
        if (slot < 1 || slot >= static_cast<int>(used[v].size()))
            throw CompositionError(std::string("phi: ") + what + " slot out of range");
        if (used[v][slot]++) throw CompositionError(std::string("phi: ") + what + " slot used twice");
    };
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    std::vector<std::vector<int>> succ(V);
    for (const auto& e : g.edges) {
        mark(used_out, e.from, e.out, "output");
        mark(used_in, e.to, e.in, "input");
        if (e.from == e.to) throw CompositionError("phi: edge from a vertex to itself");
        succ[e.from].push_back(e.to);
        parent[find(e.from)] = find(e.to);
    }
    for (const auto& l : g.outputs) mark(used_out, l.vertex, l.slot, "output");
    for (const auto& l : g.inputs) mark(used_in, l.vertex, l.slot, "input");
    for (int v = 0; v < V; ++v) {
        for (int s = 1; s <= sig[v].m; ++s)
            if (!used_out[v][s]) throw CompositionError("phi: dangling output");
        for (int s = 1; s <= sig[v].n; ++s)
            if (!used_in[v][s]) throw CompositionError("phi: dangling input");
        if (find(v) != find(0)) throw CompositionError("phi: graph is disconnected");
        if (sig[v].d != sig[0].d) throw CompositionError("phi: d mismatch");
    }
    // Kahn's algorithm detects directed cycles.
    std::vector<int> indeg(V, 0), queue;
    for (int v = 0; v < V; ++v)
        for (int w : succ[v]) ++indeg[w];
    for (int v = 0; v < V; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int w : succ[queue[q]])
            if (--indeg[w] == 0) queue.push_back(w);
    if (static_cast<int>(queue.size()) != V) throw CompositionError("phi: graph has a directed cycle");
}

FormalSum phi(const DecoratedGraph& g, const std::vector<int>& edge_order) {
    check_decorated(g);
    const int V = static_cast<int>(g.vertices.size());
    const int Ecount = static_cast<int>(g.edges.size());
    std::vector<int> order = edge_order;
    if (order.empty()) {
        order.resize(Ecount);
        std::iota(order.begin(), order.end(), 0);
    }
    {
        std::vector<int> chk = order;
        std::sort(chk.begin(), chk.end());
        for (int e = 0; e < Ecount; ++e)
            if (static_cast<int>(chk.size()) != Ecount || chk[e] != e)
                throw CompositionError("phi: edge order is not a permutation");
    }
    // Temporary labels: vertex v owns whites woff[v]+1.. and boundaries
    // boff[v]+1.. .
    std::vector<int> woff(V + 1, 0), boff(V + 1, 0);
    for (int v = 0; v < V; ++v) {
        woff[v + 1] = woff[v] + g.vertices[v].signature()->n;
        boff[v + 1] = boff[v] + g.vertices[v].signature()->m;
    }
    Terms cur{{RibbonGraph{}, Q(1)}};
    bool first = true;
    for (int v = 0; v < V; ++v) {
        Terms next;
        for (const auto& [key, c] : g.vertices[v].terms()) {
            RibbonGraph t = decode(key);
            for (int& a : t.white)
                if (a > 0) a += woff[v];
            for (int& b : t.boundary) b += boff[v];
            for (const auto& [u, cu] : cur) next.emplace_back(first ? t : disjoint_union(u, t), cu * c);
        }
        cur = std::move(next);
        first = false;
    }
    for (int e : order) {
        const auto& ed = g.edges[e];
        const int w = woff[ed.to] + ed.in, b = boff[ed.from] + ed.out;
        Terms next;
        for (const auto& [u, cu] : cur)
            glue(u, w, b, [&](const RibbonGraph& t) { next.emplace_back(t, cu); });
        cur = std::move(next);
    }
    std::vector<int> wmap(woff[V] + 1, 0), bmap(boff[V] + 1, 0);
    for (std::size_t k = 0; k < g.outputs.size(); ++k)
        bmap[boff[g.outputs[k].vertex] + g.outputs[k].slot] = static_cast<int>(k) + 1;
    for (std::size_t k = 0; k < g.inputs.size(); ++k)
        wmap[woff[g.inputs[k].vertex] + g.inputs[k].slot] = static_cast<int>(k) + 1;
    FormalSum out;
    for (auto& [u, cu] : cur) {
        for (int& a : u.white)
            if (a > 0) a = wmap[a];
        for (int& b : u.boundary) b = bmap[b];
        out.add(u, cu);
    }
    return out;
}

DecoratedGraph gamma_family(int k, int d) {
    if (k < 1) throw CompositionError("gamma_family: k must be positive");
    // Vertices: trios 0..2k-1, brackets 2k..4k-1. Bracket i sits between
    // trio i (its input 1) and trio i+1 (its input 2); the last bracket
    // closes the cycle, taking trio 0 as input 1 and trio 2k-1 as input 2.
    DecoratedGraph g;
    const int n = 2 * k;
    for (int i = 0; i < n; ++i) g.vertices.push_back(trio_rep(d));
    for (int i = 0; i < n; ++i) g.vertices.push_back(bracket_rep(d));
    auto trio = [](int i) { return i; };
    auto br = [n](int i) { return n + i; };
    for (int i = 0; i + 1 < n; ++i) {
        g.edges.push_back({trio(i), 3, br(i), 1});
        g.edges.push_back({trio(i + 1), 1, br(i), 2});
    }
    g.edges.push_back({trio(0), 1, br(n - 1), 1});
    g.edges.push_back({trio(n - 1), 3, br(n - 1), 2});
    g.outputs.push_back({br(n - 1), 1});
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) g.outputs.push_back({br(i), 1});
        g.outputs.push_back({trio(i), 2});
    }
    return g;
}

}  // namespace rgra
