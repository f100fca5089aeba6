#include "rgra/gc.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rgra/canonical.hpp"

namespace rgra {

std::vector<int> OrdinaryGraph::valences() const {
    std::vector<int> v(vertices, 0);
    for (auto [a, b] : edges) ++v[a], ++v[b];
    return v;
}

bool OrdinaryGraph::has_directed_cycle() const {
    if (!directed) return false;
    std::vector<int> indeg(vertices, 0);
    for (auto [a, b] : edges) ++indeg[b];
    std::vector<int> ready;
    for (int v = 0; v < vertices; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto [a, b] : edges)
            if (a == v && --indeg[b] == 0) ready.push_back(b);
    }
    return seen != vertices;
}

bool OrdinaryGraph::connected() const {
    if (vertices == 0) return false;
    std::vector<int> comp(vertices);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    int parts = vertices;
    for (auto [a, b] : edges) {
        int x = find(a), y = find(b);
        if (x != y) comp[x] = y, --parts;
    }
    return parts == 1;
}

namespace {

// Color refinement followed by individualization of the first nontrivial
// cell; every leaf ordering is encoded and the least encoding kept.
class Canonizer {
public:
    Canonizer(const OrdinaryGraph& g, const std::vector<int>& colors) : g_(g), colors_(colors) {
        const int V = g.vertices;
        out_.assign(V, {});
        in_.assign(V, {});
        for (auto [a, b] : g.edges) {
            out_[a].push_back(b);
            in_[b].push_back(a);
        }
        std::vector<long> init(V);
        for (int v = 0; v < V; ++v)
            init[v] = (colors.empty() ? 0 : long(colors[v]) * 4096) +
                      (g.directed ? long(out_[v].size()) * 64 + long(in_[v].size())
                                  : long(out_[v].size() + in_[v].size()));
        search(relabel(init));
    }

    OrdinaryForm result() const {
        OrdinaryForm f;
        f.key = best_;
        f.sign = zero_ ? 0 : sign_;
        f.zero = zero_;
        return f;
    }

private:
    // Dense ranks of arbitrary values, ordered by value.
    static std::vector<int> relabel(const std::vector<long>& vals) {
        std::vector<long> s(vals);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        std::vector<int> out(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i)
            out[i] = static_cast<int>(std::lower_bound(s.begin(), s.end(), vals[i]) - s.begin());
        return out;
    }

    std::vector<int> refine(std::vector<int> c) const {
        const int V = g_.vertices;
        while (true) {
            std::vector<std::vector<int>> sig(V);
            for (int v = 0; v < V; ++v) {
                auto& s = sig[v];
                s.push_back(c[v]);
                std::vector<int> o, i;
                for (int w : out_[v]) o.push_back(c[w]);
                for (int w : in_[v]) i.push_back(c[w]);
                if (!g_.directed) {
                    o.insert(o.end(), i.begin(), i.end());
                    i.clear();
                }
                std::sort(o.begin(), o.end());
                std::sort(i.begin(), i.end());
                s.push_back(-1);
                s.insert(s.end(), o.begin(), o.end());
                s.push_back(-2);
                s.insert(s.end(), i.begin(), i.end());
            }
            std::vector<std::vector<int>> uniq(sig);
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            std::vector<int> nc(V);
            for (int v = 0; v < V; ++v)
                nc[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
            const auto before = std::set<int>(c.begin(), c.end()).size();
            c = std::move(nc);
            if (uniq.size() == before) return c;
        }
    }

    void search(std::vector<int> c) {
        c = refine(std::move(c));
        const int V = g_.vertices;
        std::vector<int> count(V, 0);
        for (int x : c) ++count[x];
        int cell = -1;
        for (int k = 0; k < V; ++k)
            if (count[k] > 1) {
                cell = k;
                break;
            }
        if (cell < 0) {
            leaf(c);
            return;
        }
        for (int v = 0; v < V; ++v) {
            if (c[v] != cell) continue;
            // v goes first in its cell
            std::vector<int> nc(c);
            for (int w = 0; w < V; ++w) nc[w] = 2 * c[w] + ((c[w] > cell || (c[w] == cell && w != v)) ? 1 : 0);
            search(nc);
        }
    }

    void leaf(const std::vector<int>& pos) {
        const int V = g_.vertices;
        const int E = static_cast<int>(g_.edges.size());
        int sign = 1;
        std::vector<std::pair<int, int>> e(E);
        for (int k = 0; k < E; ++k) {
            int a = pos[g_.edges[k].first], b = pos[g_.edges[k].second];
            if (!g_.directed && a > b) {
                std::swap(a, b);
                if (g_.d % 2 != 0) sign = -sign;
            }
            e[k] = {a, b};
        }
        std::vector<int> order(E);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return e[x] < e[y]; });
        if (g_.d % 2 == 0) sign *= permutation_parity(order);
        else sign *= permutation_parity(pos);
        std::string key;
        key.push_back(static_cast<char>(V));
        std::vector<int> at(V, 0);
        if (!colors_.empty())
            for (int v = 0; v < V; ++v) at[pos[v]] = colors_[v];
        for (int x : at) key.push_back(static_cast<char>(x));
        for (int k : order) {
            key.push_back(static_cast<char>(e[k].first));
            key.push_back(static_cast<char>(e[k].second));
        }
        if (best_.empty() || key < best_) {
            best_ = std::move(key);
            sign_ = sign;
            zero_ = false;
        } else if (key == best_ && sign != sign_) {
            zero_ = true;
        }
    }

private:
    const OrdinaryGraph& g_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> out_, in_;
    std::string best_;
    int sign_ = 1;
    bool zero_ = false;
};

OrdinaryForm canonicalize_colored(const OrdinaryGraph& g, const std::vector<int>& colors) {
    Canonizer c(g, colors);
    return c.result();
}

}  // namespace

OrdinaryForm canonicalize(const OrdinaryGraph& g) { return canonicalize_colored(g, {}); }

OrdinaryGraph decode_ordinary(const std::string& key, int d, bool directed) {
    OrdinaryGraph g;
    g.d = d;
    g.directed = directed;
    g.vertices = static_cast<unsigned char>(key.at(0));
    for (std::size_t i = 1 + g.vertices; i + 1 < key.size(); i += 2)
        g.edges.emplace_back(static_cast<unsigned char>(key[i]), static_cast<unsigned char>(key[i + 1]));
    return g;
}

void GCSum::add(const OrdinaryGraph& g, const Q& c) {
    OrdinaryForm f = canonicalize(g);
    if (f.zero || c == 0) return;
    Q& x = terms[f.key];
    x += c * f.sign;
    if (x == 0) terms.erase(f.key);
}

GCSum gc_differential(const OrdinaryGraph& g) {
    GCSum out;
    out.d = g.d;
    out.directed = g.directed;
    const int V = g.vertices;
    OrdinaryGraph t;
    for (int v = 0; v < V; ++v) {
        std::vector<int> inc;
        for (int k = 0; k < static_cast<int>(g.edges.size()); ++k)
            if (g.edges[k].first == v || g.edges[k].second == v) inc.push_back(k);
        const int k = static_cast<int>(inc.size());
        if (k < 2) continue;
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            // undirected: the last incident edge stays at the old vertex
            if (!g.directed && (mask >> (k - 1)) & 1u) continue;
            t = g;
            t.vertices = V + 1;
            for (int b = 0; b < k; ++b) {
                if (!((mask >> b) & 1u)) continue;
                auto& e = t.edges[inc[b]];
                if (e.first == v) e.first = V;
                else e.second = V;
            }
            t.edges.emplace_back(v, V);
            out.add(t, 1);
        }
    }
    return out;
}

GCSum gc_differential(const GCSum& s) {
    GCSum out;
    out.d = s.d;
    out.directed = s.directed;
    for (const auto& [key, c] : s.terms) {
        GCSum t = gc_differential(decode_ordinary(key, s.d, s.directed));
        for (const auto& [k2, c2] : t.terms) {
            Q& x = out.terms[k2];
            x += c * c2;
            if (x == 0) out.terms.erase(k2);
        }
    }
    return out;
}

OrdinaryGraph triangle(int d) {
    OrdinaryGraph g;
    g.d = d;
    g.vertices = 3;
    g.edges = {{0, 1}, {1, 2}, {2, 0}};
    return g;
}

OrdinaryGraph alternating_square() {
    OrdinaryGraph g;
    g.d = 0;
    g.directed = true;
    g.vertices = 4;
    g.edges = {{0, 1}, {2, 1}, {2, 3}, {0, 3}};
    return g;
}

std::vector<OrdinaryGraph> all_graphs(int max_vertices, int max_edges, int d, bool directed) {
    std::vector<OrdinaryGraph> out;
    std::set<std::string> seen, seen_directed;
    for (int V = 1; V <= max_vertices; ++V) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < V; ++a)
            for (int b = a + 1; b < V; ++b) pairs.emplace_back(a, b);
        const int P = static_cast<int>(pairs.size());
        for (unsigned long mask = 0; mask < (1ul << P); ++mask) {
            if (__builtin_popcountl(mask) > max_edges) continue;
            OrdinaryGraph g;
            g.d = d;
            g.vertices = V;
            for (int k = 0; k < P; ++k)
                if ((mask >> k) & 1ul) g.edges.push_back(pairs[k]);
            if (!g.connected()) continue;
            OrdinaryForm f = canonicalize(g);
            if (!seen.insert(f.key).second) continue;
            if (!directed) {
                out.push_back(decode_ordinary(f.key, d, false));
                continue;
            }
            const OrdinaryGraph u = decode_ordinary(f.key, d, true);
            const int E = static_cast<int>(u.edges.size());
            for (unsigned long dir = 0; dir < (1ul << E); ++dir) {
                OrdinaryGraph h = u;
                for (int k = 0; k < E; ++k)
                    if ((dir >> k) & 1ul) std::swap(h.edges[k].first, h.edges[k].second);
                OrdinaryForm fh = canonicalize(h);
                if (seen_directed.insert(fh.key).second) out.push_back(decode_ordinary(fh.key, d, true));
            }
        }
    }
    return out;
}

namespace {

bool generator_type(int out, int in) {
    return (out == 3 && in == 0) || (out == 2 && in == 1) || (out == 1 && in == 2);
}

}  // namespace

std::vector<FqTerm> fq_image(const OrdinaryGraph& g, int m, int n) {
    if (!g.directed) throw FqError("fq_image needs a directed graph");
    if (g.has_directed_cycle()) throw FqError("fq_image: graph has a directed cycle");
    const int V = g.vertices;
    std::vector<int> outdeg(V, 0), indeg(V, 0);
    for (auto [a, b] : g.edges) ++outdeg[a], ++indeg[b];
    std::map<std::string, FqTerm> merged;
    std::map<std::string, int> first_sign;
    std::vector<std::pair<int, int>> legs(V);
    // distribute legs vertex by vertex
    auto rec = [&](auto&& self, int v, int mo, int ni) -> void {
        if (v == V) {
            if (mo || ni) return;
            std::vector<int> colors(V);
            for (int w = 0; w < V; ++w) colors[w] = 1 + legs[w].first * 8 + legs[w].second;
            OrdinaryForm f = canonicalize_colored(g, colors);
            if (f.zero) return;
            auto [it, fresh] = merged.try_emplace(f.key);
            if (fresh) {
                it->second.legs = legs;
                first_sign[f.key] = f.sign;
            }
            it->second.coefficient += f.sign * first_sign[f.key];
            return;
        }
        for (int a = 0; a <= mo; ++a)
            for (int b = 0; b <= ni; ++b) {
                if (!generator_type(outdeg[v] + a, indeg[v] + b)) continue;
                legs[v] = {a, b};
                self(self, v + 1, mo - a, ni - b);
            }
    };
    rec(rec, 0, m, n);
    std::vector<FqTerm> out;
    for (auto& [key, t] : merged)
        if (t.coefficient != 0) out.push_back(std::move(t));
    return out;
}

DecoratedGraph fq_decorated(const OrdinaryGraph& g, const FqTerm& t) {
    const int V = g.vertices;
    if (static_cast<int>(t.legs.size()) != V) throw FqError("leg data does not match the graph");
    DecoratedGraph dg;
    std::vector<int> next_out(V, 1), next_in(V, 1);
    for (int v = 0; v < V; ++v) {
        int o = t.legs[v].first, i = t.legs[v].second;
        for (auto [a, b] : g.edges) o += a == v, i += b == v;
        if (o == 3 && i == 0) dg.vertices.push_back(trio_rep(g.d));
        else if (o == 2 && i == 1) dg.vertices.push_back(cobracket_rep(g.d));
        else if (o == 1 && i == 2) dg.vertices.push_back(bracket_rep(g.d));
        else throw FqError("vertex type without a generator");
    }
    for (auto [a, b] : g.edges) dg.edges.push_back({a, next_out[a]++, b, next_in[b]++});
    for (int v = 0; v < V; ++v) {
        for (int k = 0; k < t.legs[v].first; ++k) dg.outputs.push_back({v, next_out[v]++});
        for (int k = 0; k < t.legs[v].second; ++k) dg.inputs.push_back({v, next_in[v]++});
    }
    return dg;
}

}  // namespace rgra
