#include "rgra/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "rgra/canonical.hpp"
#include "rgra/complex.hpp"
#include "rgra/differential.hpp"

namespace rgra {

namespace {

struct Relabeling {
    std::vector<int> whites, boundaries;
    int character = 1;
};

std::vector<Relabeling> group(const Signature& sig, Character bc, Character wc) {
    std::vector<Relabeling> out;
    std::vector<int> pm(sig.m + 1), pn(sig.n + 1);
    std::iota(pm.begin(), pm.end(), 0);
    do {
        int sm = bc == Character::Sign ? permutation_parity({pm.begin() + 1, pm.end()}) : 1;
        std::iota(pn.begin(), pn.end(), 0);
        do {
            int sn = wc == Character::Sign ? permutation_parity({pn.begin() + 1, pn.end()}) : 1;
            out.push_back({pn, pm, sm * sn});
        } while (std::next_permutation(pn.begin() + 1, pn.end()));
    } while (std::next_permutation(pm.begin() + 1, pm.end()));
    return out;
}

}  // namespace

OrbitBasis orbit_basis(const Basis& b, Character boundaries, Character whites) {
    OrbitBasis ob;
    ob.sig = b.sig;
    ob.regime = b.regime;
    ob.boundaries = boundaries;
    ob.whites = whites;
    const auto grp = group(b.sig, boundaries, whites);
    // orbit members with c_k = character * sign, relative to the start graph
    std::vector<std::pair<std::string, int>> members;
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, int>>>> orbits;
    for (const auto& key : b.keys) {
        if (ob.slot.count(key)) continue;
        const RibbonGraph g = decode(key);
        members.clear();
        bool killed = false;
        std::unordered_map<std::string, int> seen;
        for (const auto& r : grp) {
            CanonicalForm cf = canonicalize(relabel_boundaries(relabel_whites(g, r.whites), r.boundaries));
            if (cf.zero) throw InvariantViolation("relabeling produced a zero graph");
            const int c = cf.sign * r.character;
            auto [it, fresh] = seen.emplace(cf.key, c);
            if (fresh) members.emplace_back(cf.key, c);
            else if (it->second != c) killed = true;
        }
        const auto& rep = *std::min_element(members.begin(), members.end());
        for (const auto& [k, c] : members) {
            if (b.find(k) < 0) throw InvariantViolation("relabeling left the basis " + b.sig.str());
            ob.slot[k] = killed ? OrbitBasis::Slot{} : OrbitBasis::Slot{-2, c * rep.second};
        }
        if (!killed) orbits.emplace_back(rep.first, members);
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [rep, mem] : orbits) {
        const int idx = static_cast<int>(ob.reps.size());
        ob.reps.push_back(rep);
        for (const auto& m : mem) ob.slot[m.first].rep = idx;
    }
    return ob;
}

SparseMatrix assemble(const OrbitBasis& src, const OrbitBasis& tgt) {
    SparseMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    std::unordered_map<std::string, long> acc;
    for (std::size_t j = 0; j < src.size(); ++j) {
        acc.clear();
        for_each_d_term(decode(src.reps[j]), [&](const RibbonGraph& t, int c) {
            CanonicalForm cf = canonicalize(t);
            if (!cf.zero) acc[std::move(cf.key)] += c * cf.sign;
        });
        auto& col = m.col[j];
        for (const auto& [key, c] : acc) {
            if (c == 0) continue;
            auto it = tgt.slot.find(key);
            if (it == tgt.slot.end())
                throw InvariantViolation("d produced a term outside the target basis (" + tgt.sig.str() + ")");
            if (it->second.rep >= 0) col.emplace_back(it->second.rep, c * it->second.sign);
        }
        compress(col);
    }
    return m;
}

std::vector<Q> coordinates(const FormalSum& s, const OrbitBasis& b) {
    std::vector<Q> x(b.size(), 0);
    for (const auto& [key, c] : s.terms()) {
        auto it = b.slot.find(key);
        if (it == b.slot.end()) throw InvariantViolation("term outside basis " + b.sig.str());
        if (it->second.rep >= 0) x[it->second.rep] += c * it->second.sign;
    }
    return x;
}

FormalSum from_coordinates(const std::vector<Q>& x, const OrbitBasis& b) {
    FormalSum s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.add_key(b.reps[i], x[i]);
    return symmetrize(s, b.boundaries, b.whites);
}

}  // namespace rgra
