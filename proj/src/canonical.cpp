#include "rgra/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgra {

int permutation_parity(const std::vector<int>& seq) {
    int inv = 0;
    const std::size_t n = seq.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (seq[i] > seq[j]) ++inv;
    return (inv % 2) ? -1 : 1;
}

namespace {

struct Workspace {
    std::vector<int> vid, val, order, pos, minpos, seq;
    std::vector<std::uint8_t> body, best;
    std::vector<int> roots;
};

Workspace& ws() {
    thread_local Workspace w;
    return w;
}

int vertex_ids(const RibbonGraph& g, std::vector<int>& vid, std::vector<int>& val) {
    const int H = g.num_half_edges();
    vid.assign(H, -1);
    val.assign(H, 0);
    int nv = 0;
    for (int h = 0; h < H; ++h) {
        if (vid[h] >= 0) continue;
        int k = 0, x = h;
        do {
            vid[x] = nv;
            ++k;
            x = g.sigma[x];
        } while (x != h);
        do {
            val[x] = k;
            x = g.sigma[x];
        } while (x != h);
        ++nv;
    }
    return nv;
}

int sign_with(const RibbonGraph& g, const std::vector<int>& pos, const std::vector<int>& vid,
              std::vector<int>& minpos, std::vector<int>& seq) {
    const auto& o = g.orientation;
    int s = 1;
    if (!g.odd()) {
        seq.clear();
        for (int e : o.edges) seq.push_back(pos[e] >> 1);
        return permutation_parity(seq);
    }
    for (auto [a, b] : o.edge_dirs)
        if (pos[a] & 1) s = -s;
    const int H = g.num_half_edges();
    minpos.assign(H, H);
    for (int h = 0; h < H; ++h) minpos[vid[h]] = std::min(minpos[vid[h]], pos[h]);
    seq.clear();
    for (int v : o.black_order) seq.push_back(minpos[vid[v]]);
    return s * permutation_parity(seq);
}

}  // namespace

int relabeling_sign(const RibbonGraph& g, const std::vector<int>& pos) {
    std::vector<int> vid, val, minpos, seq;
    vertex_ids(g, vid, val);
    return sign_with(g, pos, vid, minpos, seq);
}

CanonicalForm canonicalize(const RibbonGraph& g) {
    auto& w = ws();
    const int H = g.num_half_edges();
    if (H == 0 || H > 250) throw std::invalid_argument("canonicalize: unsupported size");
    const int V = vertex_ids(g, w.vid, w.val);
    int m = 0, n = 0;
    for (int h = 0; h < H; ++h) {
        m = std::max(m, g.boundary[h]);
        n = std::max(n, g.white[h]);
    }

    auto inv = [&](int h) -> std::uint64_t {
        int t = g.tau[h];
        return (std::uint64_t(g.boundary[h]) << 48) | (std::uint64_t(g.white[h]) << 40) |
               (std::uint64_t(w.val[h]) << 32) | (std::uint64_t(g.boundary[t]) << 16) |
               (std::uint64_t(g.white[t]) << 8) | std::uint64_t(w.val[t]);
    };
    std::uint64_t mk = ~std::uint64_t(0);
    for (int h = 0; h < H; ++h) mk = std::min(mk, inv(h));
    w.roots.clear();
    for (int h = 0; h < H; ++h)
        if (inv(h) == mk) w.roots.push_back(h);

    bool have = false;
    int sign = 0;
    bool zero = false;
    w.best.resize(3 * H);
    w.body.resize(3 * H);
    w.pos.resize(H);
    w.order.resize(H);
    for (int r : w.roots) {
        std::fill(w.pos.begin(), w.pos.end(), -1);
        int filled = 0;
        auto push = [&](int x) {
            w.pos[x] = filled;
            w.order[filled++] = x;
            int t = g.tau[x];
            w.pos[t] = filled;
            w.order[filled++] = t;
        };
        push(r);
        int cmp = have ? 0 : -1;
        bool abort = false;
        for (int i = 0; i < H; ++i) {
            if (i >= filled) throw std::invalid_argument("canonicalize: graph is disconnected");
            int h = w.order[i];
            int x = g.sigma[h];
            if (w.pos[x] < 0) push(x);
            std::uint8_t* b = &w.body[3 * i];
            b[0] = static_cast<std::uint8_t>(w.pos[x]);
            b[1] = static_cast<std::uint8_t>(g.white[h]);
            b[2] = static_cast<std::uint8_t>(g.boundary[h]);
            if (cmp == 0) {
                for (int k = 0; k < 3 && cmp == 0; ++k) {
                    if (b[k] < w.best[3 * i + k]) cmp = -1;
                    else if (b[k] > w.best[3 * i + k]) cmp = 1;
                }
                if (cmp > 0) { abort = true; break; }
            }
        }
        if (abort) continue;
        int s = sign_with(g, w.pos, w.vid, w.minpos, w.seq);
        if (cmp < 0) {
            std::swap(w.best, w.body);
            w.body.resize(3 * H);
            have = true;
            sign = s;
            zero = false;
        } else if (s != sign) {
            zero = true;
        }
    }

    CanonicalForm out;
    const int E = H / 2;
    out.key.reserve(6 + 3 * H);
    out.key.push_back(static_cast<char>(kEncodingVersion));
    out.key.push_back(static_cast<char>(static_cast<std::int8_t>(g.d)));
    out.key.push_back(static_cast<char>(m));
    out.key.push_back(static_cast<char>(n));
    out.key.push_back(static_cast<char>((2 - V + E - m) / 2));
    out.key.push_back(static_cast<char>(E));
    out.key.append(reinterpret_cast<const char*>(w.best.data()), 3 * H);
    out.zero = zero;
    out.sign = zero ? 0 : sign;
    return out;
}

int key_num_edges(const std::string& key) { return static_cast<std::uint8_t>(key[5]); }

Signature key_signature(const std::string& key) {
    if (key.size() < 6 || static_cast<std::uint8_t>(key[0]) != kEncodingVersion)
        throw std::invalid_argument("unknown encoding version");
    Signature s;
    s.d = static_cast<std::int8_t>(key[1]);
    s.m = static_cast<std::uint8_t>(key[2]);
    s.n = static_cast<std::uint8_t>(key[3]);
    s.g = static_cast<std::uint8_t>(key[4]);
    int E = static_cast<std::uint8_t>(key[5]);
    s.degree = E - s.d * (2 * s.g - 2 + s.m + s.n);
    return s;
}

RibbonGraph decode(const std::string& key) {
    Signature s = key_signature(key);
    const int E = key_num_edges(key);
    const int H = 2 * E;
    if (static_cast<int>(key.size()) != 6 + 3 * H) throw std::invalid_argument("bad encoding length");
    RibbonGraph g;
    g.d = s.d;
    g.tau.resize(H);
    g.sigma.resize(H);
    g.white.resize(H);
    g.boundary.resize(H);
    for (int h = 0; h < H; ++h) {
        g.tau[h] = h ^ 1;
        g.sigma[h] = static_cast<std::uint8_t>(key[6 + 3 * h]);
        g.white[h] = static_cast<std::uint8_t>(key[6 + 3 * h + 1]);
        g.boundary[h] = static_cast<std::uint8_t>(key[6 + 3 * h + 2]);
    }
    g.orientation = default_orientation(g);
    std::sort(g.orientation.black_order.begin(), g.orientation.black_order.end());
    return g;
}

int normalize(RibbonGraph& g) {
    const int H = g.num_half_edges();
    std::vector<int> pos(H, -1), order;
    order.reserve(H);
    if (!g.odd()) {
        for (int e : g.orientation.edges) {
            int a = std::min(e, g.tau[e]);
            pos[a] = static_cast<int>(order.size());
            order.push_back(a);
            pos[g.tau[a]] = static_cast<int>(order.size());
            order.push_back(g.tau[a]);
        }
    } else {
        for (auto [a, b] : g.orientation.edge_dirs) {
            pos[a] = static_cast<int>(order.size());
            order.push_back(a);
            pos[b] = static_cast<int>(order.size());
            order.push_back(b);
        }
    }
    int s = relabeling_sign(g, pos);
    RibbonGraph out;
    out.d = g.d;
    out.tau.resize(H);
    out.sigma.resize(H);
    out.white.resize(H);
    out.boundary.resize(H);
    for (int i = 0; i < H; ++i) {
        int h = order[i];
        out.tau[i] = i ^ 1;
        out.sigma[i] = pos[g.sigma[h]];
        out.white[i] = g.white[h];
        out.boundary[i] = g.boundary[h];
    }
    out.orientation = default_orientation(out);
    std::sort(out.orientation.black_order.begin(), out.orientation.black_order.end());
    g = std::move(out);
    return s;
}

}  // namespace rgra
