#include "rgra/basis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include "rgra/canonical.hpp"
#include "rgra/differential.hpp"

namespace rgra {

int max_edges_at_least_three(int m, int n, int g) { return 3 * m + 6 * g - 6 + 2 * n; }

int min_edges(int m, int n, int g) {
    if (n == 0) return m - 1 + 2 * g;
    if (m == 1 && g == 0) return std::max(n - 1, 1);
    return n + m - 2 + 2 * g;
}

namespace {

struct Level {
    std::vector<std::string> keys;
    std::vector<char> zero;
    std::unordered_set<std::string> seen;

    void insert(const RibbonGraph& g, const Caps& caps) {
        CanonicalForm cf = canonicalize(g);
        if (seen.insert(cf.key).second) {
            keys.push_back(std::move(cf.key));
            zero.push_back(cf.zero ? 1 : 0);
            if (keys.size() > caps.max_graphs)
                throw CapExceeded("enumeration exceeds graph cap at " + std::to_string(g.num_edges()) +
                                  " edges");
        }
    }
};

struct Family {
    int e0 = 0;
    std::vector<Level> levels;
};

using FamilyKey = std::tuple<int, int, int, int, int>;
std::map<FamilyKey, Family>& cache() {
    static std::map<FamilyKey, Family> c;
    return c;
}
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

void check_size(int edges, const Caps& caps) {
    if (2 * edges > caps.max_half_edges)
        throw CapExceeded("graphs with " + std::to_string(2 * edges) + " half-edges exceed the cap of " +
                          std::to_string(caps.max_half_edges));
}

// One-vertex maps with m labelled boundaries and genus g.
Level one_vertex_maps(int d, int m, int g, int label, const Caps& caps) {
    const int E = m - 1 + 2 * g;
    const int H = 2 * E;
    check_size(E, caps);
    Level unlabeled;
    std::vector<int> tau(H, -1);
    RibbonGraph G;
    G.d = d;
    G.sigma.resize(H);
    for (int h = 0; h < H; ++h) G.sigma[h] = (h + 1) % H;
    G.white.assign(H, label);
    G.boundary.assign(H, 1);
    std::function<void()> rec = [&]() {
        int i = 0;
        while (i < H && tau[i] >= 0) ++i;
        if (i == H) {
            G.tau = tau;
            if (static_cast<int>(boundary_cycles(G).size()) != m) return;
            G.orientation = default_orientation(G);
            unlabeled.insert(G, caps);
            return;
        }
        for (int j = i + 1; j < H; ++j) {
            if (tau[j] >= 0) continue;
            tau[i] = j;
            tau[j] = i;
            rec();
            tau[i] = tau[j] = -1;
        }
    };
    rec();
    Level out;
    std::vector<int> perm(m);
    for (const auto& key : unlabeled.keys) {
        RibbonGraph u = decode(key);
        auto cycles = boundary_cycles(u);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            for (int c = 0; c < m; ++c)
                for (int h : cycles[c]) u.boundary[h] = perm[c];
            out.insert(u, caps);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

Level bracket_tree(int d) {
    Level out;
    RibbonGraph G = build_graph(d, {{1, {0}}, {2, {1}}}, {{0, 1}}, {{0, 1}});
    out.insert(G, Caps{});
    return out;
}

// Splits white vertices, the new one receiving label n+1.
Level split_whites(const Level& in, int new_label, const Caps& caps) {
    Level out;
    for (const auto& key : in.keys) {
        RibbonGraph G = decode(key);
        check_size(G.num_edges() + 1, caps);
        for (const auto& v : vertex_cycles(G)) {
            if (G.white[v[0]] == 0) continue;
            const int k = static_cast<int>(v.size());
            for (int len = 0; len <= k; ++len)
                for (int start = 0; start < k; ++start)
                    out.insert(split_vertex(G, v, start, len, new_label), caps);
        }
    }
    return out;
}

// All graphs obtained by one vertex split creating a black vertex.
Level expand(const Level& in, Regime regime, const Caps& caps) {
    Level out;
    const int lo = regime == Regime::AtLeastThree ? 2 : 0;
    for (const auto& key : in.keys) {
        RibbonGraph G = decode(key);
        check_size(G.num_edges() + 1, caps);
        for (const auto& v : vertex_cycles(G)) {
            const int k = static_cast<int>(v.size());
            const bool black = G.white[v[0]] == 0;
            for (int len = lo; len <= k; ++len) {
                if (black && k - len < lo) continue;
                if (black && 2 * len > k) continue;  // unordered for black
                for (int start = 0; start < k; ++start)
                    out.insert(split_vertex(G, v, start, len, 0), caps);
            }
        }
    }
    return out;
}

Family& family(int d, int m, int n, int g, Regime regime, const Caps& caps) {
    auto& c = cache();
    FamilyKey fk{d, m, n, g, static_cast<int>(regime)};
    auto it = c.find(fk);
    if (it != c.end()) return it->second;
    Family f;
    Level base;
    if (n == 0) {
        base = one_vertex_maps(d, m, g, 0, caps);
    } else if (m == 1 && g == 0) {
        base = bracket_tree(d);
        for (int k = 3; k <= n; ++k) base = split_whites(base, k, caps);
    } else {
        base = one_vertex_maps(d, m, g, 1, caps);
        for (int k = 2; k <= n; ++k) base = split_whites(base, k, caps);
    }
    f.e0 = min_edges(m, n, g);
    if (n == 0 && regime == Regime::AtLeastThree && 2 * f.e0 < 3) base = Level{};
    f.levels.push_back(std::move(base));
    return c.emplace(fk, std::move(f)).first->second;
}

}  // namespace

Basis enumerate(const Signature& sig, Regime regime, const Caps& caps) {
    Basis b;
    b.sig = sig;
    b.regime = regime;
    const int m = sig.m, n = sig.n, g = sig.g;
    if (m < 1 || n < 0 || g < 0 || 2 * g + m + n < 3) return b;
    const int E = sig.num_edges();
    if (E < min_edges(m, n, g)) return b;
    if (regime == Regime::AtLeastThree && E > max_edges_at_least_three(m, n, g)) return b;
    check_size(E, caps);

    std::lock_guard<std::mutex> lock(cache_mutex());
    Family& f = family(sig.d, m, n, g, regime, caps);
    while (static_cast<int>(f.levels.size()) <= E - f.e0) {
        Level next = expand(f.levels.back(), regime, caps);
        f.levels.push_back(std::move(next));
    }
    const Level& L = f.levels[E - f.e0];
    for (std::size_t i = 0; i < L.keys.size(); ++i)
        if (!L.zero[i]) b.keys.push_back(L.keys[i]);
    std::sort(b.keys.begin(), b.keys.end());
    for (std::size_t i = 0; i < b.keys.size(); ++i) b.index.emplace(b.keys[i], static_cast<int>(i));
    return b;
}

void clear_basis_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache().clear();
}

Basis enumerate_brute_force(const Signature& sig, Regime regime) {
    // Every vertex assignment and rotation system on 2E half-edges with
    // tau(h) = h^1, filtered and deduplicated by canonical form.
    Basis b;
    b.sig = sig;
    b.regime = regime;
    const int E = sig.num_edges();
    const int H = 2 * E;
    if (E <= 0 || sig.m < 1) return b;
    const int V = E - sig.m + 2 - 2 * sig.g;
    if (V < std::max(sig.n, 1)) return b;
    const int nb = V - sig.n;
    std::unordered_set<std::string> seen;
    std::vector<int> vert(H, -1);
    RibbonGraph G;
    G.d = sig.d;
    G.tau.resize(H);
    for (int h = 0; h < H; ++h) G.tau[h] = h ^ 1;
    G.sigma.resize(H);
    G.white.resize(H);
    G.boundary.assign(H, 1);

    std::vector<std::vector<int>> members(V);
    // vertex assignment: half-edge h goes to vertex vert[h]; blacks are
    // unlabeled, so they are filled in order of first use.
    std::function<void(int, int)> assign;
    std::function<void(int)> rotations;
    auto finish = [&]() {
        for (int v = 0; v < V; ++v) {
            int need = v < sig.n ? 1 : (regime == Regime::AtLeastThree ? 3 : 1);
            if (static_cast<int>(members[v].size()) < need) return;
        }
        rotations(0);
    };
    assign = [&](int h, int used_black) {
        if (h == H) {
            if (used_black == nb) finish();
            return;
        }
        for (int v = 0; v < sig.n; ++v) {
            vert[h] = v;
            members[v].push_back(h);
            assign(h + 1, used_black);
            members[v].pop_back();
        }
        for (int j = 0; j < std::min(used_black + 1, nb); ++j) {
            int v = sig.n + j;
            vert[h] = v;
            members[v].push_back(h);
            assign(h + 1, std::max(used_black, j + 1));
            members[v].pop_back();
        }
    };
    rotations = [&](int v) {
        if (v == V) {
            for (int h = 0; h < H; ++h) G.white[h] = vert[h] < sig.n ? vert[h] + 1 : 0;
            auto cycles = boundary_cycles(G);
            if (static_cast<int>(cycles.size()) != sig.m) return;
            std::vector<int> perm(sig.m);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                for (int c = 0; c < sig.m; ++c)
                    for (int h : cycles[c]) G.boundary[h] = perm[c];
                // connectivity is checked by canonicalize
                G.orientation = default_orientation(G);
                auto rep = validate(G, regime);
                if (!rep.ok) continue;
                CanonicalForm cf = canonicalize(G);
                if (!cf.zero && seen.insert(cf.key).second) b.keys.push_back(cf.key);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        auto& mem = members[v];
        // fix the first member, permute the rest
        std::vector<int> rest(mem.begin() + 1, mem.end());
        std::sort(rest.begin(), rest.end());
        do {
            int prev = mem[0];
            for (int h : rest) {
                G.sigma[prev] = h;
                prev = h;
            }
            G.sigma[prev] = mem[0];
            rotations(v + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    assign(0, 0);
    std::sort(b.keys.begin(), b.keys.end());
    for (std::size_t i = 0; i < b.keys.size(); ++i) b.index.emplace(b.keys[i], static_cast<int>(i));
    return b;
}

}  // namespace rgra
