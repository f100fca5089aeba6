#include "rgra/complex.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "rgra/differential.hpp"
#include "rgra/linalg.hpp"

namespace rgra {

SparseMatrix assemble(const Basis& src, const Basis& tgt) {
    SparseMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    std::unordered_map<std::string, long> acc;
    for (std::size_t j = 0; j < src.size(); ++j) {
        acc.clear();
        for_each_d_term(decode(src.keys[j]), [&](const RibbonGraph& t, int c) {
            CanonicalForm cf = canonicalize(t);
            if (!cf.zero) acc[std::move(cf.key)] += c * cf.sign;
        });
        auto& col = m.col[j];
        for (const auto& [key, c] : acc) {
            if (c == 0) continue;
            int i = tgt.find(key);
            if (i < 0)
                throw InvariantViolation("d produced a term outside the target basis (" + tgt.sig.str() + ")");
            col.emplace_back(i, c);
        }
        compress(col);
    }
    return m;
}

std::vector<Q> coordinates(const FormalSum& s, const Basis& b) {
    std::vector<Q> x(b.size(), 0);
    for (const auto& [key, c] : s.terms()) {
        int i = b.find(key);
        if (i < 0) throw InvariantViolation("term outside basis " + b.sig.str());
        x[i] = c;
    }
    return x;
}

FormalSum from_coordinates(const std::vector<Q>& x, const Basis& b) {
    FormalSum s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.add_key(b.keys[i], x[i]);
    return s;
}

std::pair<int, int> degree_range(int d, int m, int n, int g, Regime regime, int max_edges) {
    int shift = d * (2 * g - 2 + m + n);
    int lo = min_edges(m, n, g);
    int hi = regime == Regime::AtLeastThree ? max_edges_at_least_three(m, n, g) : max_edges;
    hi = std::min(hi, max_edges);
    return {lo - shift, hi - shift};
}

namespace {

struct RankKey {
    Signature sig;
    int regime;
    bool operator<(const RankKey& o) const {
        return std::tie(sig, regime) < std::tie(o.sig, o.regime);
    }
};

struct RankValue {
    long rank = 0;
    bool verified = false;
};

std::map<RankKey, RankValue>& rank_cache() {
    static std::map<RankKey, RankValue> c;
    return c;
}

}  // namespace

long differential_rank(const Signature& source, Regime regime, const RankOptions& opt, bool* verified) {
    RankKey key{source, static_cast<int>(regime)};
    auto& cache = rank_cache();
    if (auto it = cache.find(key); it != cache.end() && (!opt.certify || it->second.verified)) {
        if (verified) *verified = it->second.verified;
        return it->second.rank;
    }
    Signature target = source;
    target.degree += 1;
    Basis src = enumerate(source, regime, opt.caps);
    Basis tgt = enumerate(target, regime, opt.caps);
    RankValue rv;
    if (src.size() == 0 || tgt.size() == 0) {
        rv.rank = 0;
        rv.verified = true;
    } else {
        SparseMatrix mtx = assemble(src, tgt);
        long r = -1;
        for (auto p : opt.primes) {
            long rp = rank_mod_p(mtx, p);
            if (r >= 0 && rp != r)
                throw InvariantViolation("ranks disagree across primes for " + source.str());
            r = std::max(r, rp);
        }
        if (opt.certify || opt.primes.empty()) {
            long rq = rank_q(mtx);
            if (r >= 0 && rq != r) throw InvariantViolation("rank over Q differs from rank mod p");
            r = rq;
            rv.verified = true;
        }
        rv.rank = r;
    }
    cache[key] = rv;
    if (verified) *verified = rv.verified;
    return rv.rank;
}

std::vector<CohomologyEntry> cohomology(int d, int m, int n, int g, Regime regime, int deg_lo, int deg_hi,
                                        const RankOptions& opt) {
    std::vector<CohomologyEntry> out;
    for (int k = deg_lo; k <= deg_hi; ++k) {
        CohomologyEntry e;
        e.sig = Signature{d, m, n, g, k};
        Basis b = enumerate(e.sig, regime, opt.caps);
        e.basis = static_cast<long>(b.size());
        bool v1 = true, v2 = true;
        Signature prev = e.sig;
        prev.degree -= 1;
        e.rank_in = differential_rank(prev, regime, opt, &v1);
        e.rank_out = differential_rank(e.sig, regime, opt, &v2);
        e.dimension = e.basis - e.rank_in - e.rank_out;
        e.verified = v1 && v2;
        if (e.dimension < 0) throw InvariantViolation("negative cohomology dimension at " + e.sig.str());
        out.push_back(e);
    }
    return out;
}

}  // namespace rgra
