#include "rgra/def.hpp"

#include <tuple>

#include "rgra/complex.hpp"
#include "rgra/properad.hpp"

namespace rgra {

bool DefElement::is_zero() const {
    for (const auto& [mn, v] : blocks)
        for (const auto& c : v)
            if (c != 0) return false;
    return true;
}

namespace {

DefElement combine(const DefElement& a, const DefElement& b, int sign) {
    if (a.g != b.g || a.degree != b.degree) throw std::invalid_argument("Def elements of different genus or degree");
    DefElement out = a;
    for (const auto& [mn, v] : b.blocks) {
        auto& t = out.blocks[mn];
        if (t.empty()) t.assign(v.size(), 0);
        if (t.size() != v.size()) throw std::invalid_argument("Def blocks of different size");
        for (std::size_t i = 0; i < v.size(); ++i) t[i] += sign * v[i];
    }
    return out;
}

}  // namespace

DefElement operator+(const DefElement& a, const DefElement& b) { return combine(a, b, 1); }

bool DefElement::operator==(const DefElement& o) const {
    if (g != o.g || degree != o.degree) return false;
    return combine(*this, o, -1).is_zero();
}

DefComplex::DefComplex(int g, int max_legs, Caps caps) : g_(g), max_legs_(max_legs), caps_(caps) {}

const IsotypicBlock& DefComplex::block(int m, int n, int def_degree) {
    auto key = std::make_tuple(m, n, def_degree);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    Signature sig{0, m, n, g_, graph_degree(m, def_degree)};
    auto b = std::make_unique<IsotypicBlock>(
        isotypic_block(sig, Character::Sign, Character::Trivial, Regime::AtLeastThree, caps_));
    return *cache_.emplace(key, std::move(b)).first->second;
}

FormalSum DefComplex::lift(const DefElement& x, int m, int n) {
    FormalSum out;
    auto it = x.blocks.find({m, n});
    if (it == x.blocks.end()) return out;
    const IsotypicBlock& b = block(m, n, x.degree);
    if (it->second.size() != b.h.reps.size()) throw std::invalid_argument("coordinate vector has the wrong length");
    for (std::size_t i = 0; i < it->second.size(); ++i)
        if (it->second[i] != 0) out.add(from_coordinates(b.h.reps[i], b.cur), it->second[i]);
    return out;
}

Reduction DefComplex::reduce_block(const FormalSum& chain, int m, int n, int def_degree) {
    return ::rgra::reduce(block(m, n, def_degree), chain);
}

DefElement DefComplex::reduce(const std::map<std::pair<int, int>, FormalSum>& chains, int def_degree) {
    DefElement out;
    out.g = g_;
    out.degree = def_degree;
    for (const auto& [mn, s] : chains) {
        Reduction r = reduce_block(s, mn.first, mn.second, def_degree);
        if (!r.cocycle)
            throw InvariantViolation("Def block (" + std::to_string(mn.first) + "," + std::to_string(mn.second) +
                                     ") is not closed");
        out.blocks[mn] = std::move(r.coordinates);
    }
    return out;
}

FormalSum DefComplex::chain_part(const FormalSum& x, int def_degree, DefPart p) {
    if (x.empty()) return {};
    const FormalSum gen = p == DefPart::Bracket ? bracket_rep() : p == DefPart::Cobracket ? cobracket_rep() : trio_rep();
    const Signature sx = *x.signature(), sg = *gen.signature();
    FormalSum left, right;
    for (int i = 1; i <= sg.n; ++i)
        for (int j = 1; j <= sx.m; ++j) left += compose(gen, i, x, j);
    for (int i = 1; i <= sx.n; ++i)
        for (int j = 1; j <= sg.m; ++j) right += compose(x, i, gen, j);
    if (def_degree % 2 != 0) right *= -1;
    return left - right;
}

DefElement DefComplex::apply(const DefElement& x, DefPart p) {
    DefElement out;
    out.g = g_;
    out.degree = x.degree + 1;
    for (const auto& [mn, v] : x.blocks) {
        const auto [m, n] = mn;
        const int tm = p == DefPart::Bracket ? m : p == DefPart::Cobracket ? m + 1 : m + 2;
        const int tn = p == DefPart::Bracket ? n + 1 : p == DefPart::Cobracket ? n : n - 1;
        if (tn < 0) continue;
        if (tm + tn > max_legs_) {
            truncated_.emplace_back(tm, tn);
            continue;
        }
        FormalSum chain = chain_part(lift(x, m, n), x.degree, p);
        const IsotypicBlock& b = block(tm, tn, out.degree);
        Reduction r = ::rgra::reduce(b, chain);
        if (!r.cocycle) throw InvariantViolation("a part of delta left the cocycles");
        auto& t = out.blocks[{tm, tn}];
        if (t.empty()) t.assign(r.coordinates.size(), 0);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += r.coordinates[i];
    }
    return out;
}

DefElement DefComplex::differential(const DefElement& x) {
    return apply(x, DefPart::Bracket) + apply(x, DefPart::Cobracket) + apply(x, DefPart::Trio);
}

TheoremCReport check_theorem_c() {
    TheoremCReport rep;
    const OrdinaryGraph sq = alternating_square();
    const std::pair<int, int> shapes[3] = {{2, 2}, {3, 1}, {4, 0}};
    constexpr int kDegree = 5;
    DefComplex def(1, 4);
    std::map<std::pair<int, int>, FormalSum> chains;
    for (int s = 0; s < 3; ++s) {
        const auto [m, n] = shapes[s];
        rep.fq_terms[s] = fq_image(sq, m, n);
        FormalSum c;
        for (const auto& t : rep.fq_terms[s]) c.add(phi(fq_decorated(sq, t)), Q(t.coefficient));
        chains[shapes[s]] = std::move(c);
    }
    rep.element = def.reduce(chains, kDegree);

    const FormalSum tt = phi(gamma_family(1));
    const FormalSum p40 = symmetrize(chains[{4, 0}], Character::Sign, Character::Trivial);
    const FormalSum ptt = symmetrize(tt, Character::Sign, Character::Trivial);
    rep.theta_theta_block = !p40.empty() && (p40 == ptt || p40 == Q(-1) * ptt);
    rep.theta_theta_class_zero = def.reduce_block(tt, 4, 0, kDegree).exact;

    // every part of delta raises m + n by one
    rep.cocycle_in_truncation = true;
    for (const auto& [mn, v] : rep.element.blocks) {
        const auto [m, n] = mn;
        const std::pair<int, int> targets[3] = {{m, n + 1}, {m + 1, n}, {m + 2, n - 1}};
        for (const auto& t : targets) {
            if (t.second < 0) continue;
            if (t.first + t.second <= def.max_legs()) rep.cocycle_in_truncation = false;
            else rep.delta_targets_outside.push_back(t);
        }
    }
    bool all_zero = true;
    for (int m = 1; m <= 3; ++m) {
        const int n = 3 - m;
        const long dim = def.block(m, n, kDegree - 1).h.dimension();
        rep.preimage_blocks.push_back({{m, n}, dim});
        if (dim != 0) all_zero = false;
    }
    rep.not_exact = all_zero && !rep.element.is_zero();
    return rep;
}

}  // namespace rgra
