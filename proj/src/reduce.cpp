#include "rgra/reduce.hpp"

#include <limits>
#include <stdexcept>

#include "rgra/complex.hpp"
#include "rgra/differential.hpp"
#include "rgra/linalg.hpp"

namespace rgra {

namespace {

std::vector<Q> primitive_integral(std::vector<Q> v) {
    mpz_class l = 1, gcd = 0;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) {
        x *= l;
        if (x != 0) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    if (gcd > 1)
        for (auto& x : v) x /= gcd;
    return v;
}

long to_long(const Q& x) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
        throw InvariantViolation("representative entry does not fit a machine integer");
    return x.get_num().get_si();
}

bool is_zero(const std::vector<Q>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

CohomologyBasisData cohomology_basis(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.rows != d_out.cols) throw std::invalid_argument("differentials do not compose");
    CohomologyBasisData h;
    h.chain_dim = d_out.cols;
    h.rank_in = rank_q(d_in);
    auto ker = kernel_q(d_out);
    h.rank_out = h.chain_dim - static_cast<long>(ker.size());
    const auto kept = greedy_independent_modulo(d_in, ker);
    if (static_cast<long>(kept.size()) + h.rank_in != static_cast<long>(ker.size()))
        throw InvariantViolation("image is not contained in the kernel");
    for (int k : kept) h.reps.push_back(primitive_integral(std::move(ker[k])));
    return h;
}

Reduction reduce(const CohomologyBasisData& h, const SparseMatrix& d_in, const SparseMatrix& d_out,
                 const std::vector<Q>& x) {
    Reduction r;
    r.method = "rational";
    r.rank_in = h.rank_in;
    auto dx = apply(d_out, x);
    if (!is_zero(dx)) {
        r.coboundary = std::move(dx);
        return r;
    }
    r.cocycle = true;
    SparseMatrix a = d_in;
    a.cols += static_cast<int>(h.reps.size());
    for (const auto& rep : h.reps) {
        std::vector<SparseMatrix::Entry> col;
        for (int i = 0; i < static_cast<int>(rep.size()); ++i)
            if (rep[i] != 0) col.emplace_back(i, to_long(rep[i]));
        a.col.push_back(std::move(col));
    }
    auto sol = solve_q(a, x);
    if (!sol) throw InvariantViolation("cocycle outside image plus representatives");
    r.coordinates.assign(sol->begin() + d_in.cols, sol->end());
    sol->resize(d_in.cols);
    r.witness = std::move(*sol);
    r.exact = is_zero(r.coordinates);
    r.nonzero = !r.exact;
    return r;
}

std::optional<Reduction> reduce_modular(const SparseMatrix& d_prev, const SparseMatrix& d_in,
                                        const std::vector<Q>& x, std::uint32_t prime) {
    if (d_prev.rows != d_in.cols) throw std::invalid_argument("differentials do not compose");
    if (!multiply(d_in, d_prev).is_zero()) throw InvariantViolation("d^2 != 0 below the reduced degree");
    Reduction r;
    r.method = "modular";
    r.cocycle = true;
    r.prime = prime;
    r.rank_prev = rank_mod_p(d_prev, prime);
    r.rank_in = rank_mod_p(d_in, prime);
    if (d_in.cols - r.rank_prev - r.rank_in != 0) return std::nullopt;
    if (!in_column_span_mod_p(d_in, x, prime)) {
        r.nonzero = true;
        return r;
    }
    r.witness = solve_q(d_in, x);
    r.exact = r.witness.has_value();
    if (!r.exact) return std::nullopt;
    return r;
}

namespace {

Signature shifted(Signature s, int by) {
    s.degree += by;
    return s;
}

template <class B>
GraphReduction finish(GraphReduction out, const B& prev) {
    if (out.r.witness) out.witness = from_coordinates(*out.r.witness, prev);
    return out;
}

template <class B, class Make>
GraphReduction reduce_graphs(const FormalSum& x, GraphReduction out, const ReduceOptions& opt, Make make) {
    const Signature sig = out.sig;
    B cur = make(sig);
    B prev = make(shifted(sig, -1));
    const auto xc = coordinates(x, cur);
    if (cur.size() <= opt.max_rational) {
        B next = make(shifted(sig, 1));
        SparseMatrix d_in = assemble(prev, cur), d_out = assemble(cur, next);
        CohomologyBasisData h = cohomology_basis(d_in, d_out);
        out.r = reduce(h, d_in, d_out, xc);
        if (!out.r.cocycle) throw InvariantViolation("projection of a cocycle is not closed");
        for (const auto& rep : h.reps) out.reps.push_back(from_coordinates(rep, cur));
        return finish(std::move(out), prev);
    }
    B prev2 = make(shifted(sig, -2));
    auto r = reduce_modular(assemble(prev2, prev), assemble(prev, cur), xc, opt.prime);
    if (!r) throw CapExceeded("block " + sig.str() + " too large for exact reduction and H^(k-1) mod p is nonzero");
    out.r = std::move(*r);
    return finish(std::move(out), prev);
}

GraphReduction start(const FormalSum& x, Regime regime) {
    if (x.empty()) throw std::invalid_argument("reduce_to_cohomology needs a nonempty sum to fix the signature");
    GraphReduction out;
    out.sig = *x.signature();
    out.regime = regime;
    FormalSum dx = d_twist(x);
    if (!dx.empty()) throw NotACocycle("not a cocycle in " + out.sig.str(), std::move(dx));
    return out;
}

}  // namespace

GraphReduction reduce_to_cohomology(const FormalSum& x, Regime regime, const ReduceOptions& opt) {
    GraphReduction out = start(x, regime);
    return reduce_graphs<Basis>(x, std::move(out), opt,
                                [&](const Signature& s) { return enumerate(s, regime, opt.caps); });
}

GraphReduction reduce_to_cohomology(const FormalSum& x, Character boundaries, Character whites, Regime regime,
                                    const ReduceOptions& opt) {
    GraphReduction out = start(x, regime);
    out.symmetrized = true;
    out.boundaries = boundaries;
    out.whites = whites;
    return reduce_graphs<OrbitBasis>(x, std::move(out), opt, [&](const Signature& s) {
        return orbit_basis(enumerate(s, regime, opt.caps), boundaries, whites);
    });
}

IsotypicBlock isotypic_block(const Signature& sig, Character boundaries, Character whites, Regime regime,
                             const Caps& caps) {
    IsotypicBlock b;
    b.sig = sig;
    b.regime = regime;
    b.prev = orbit_basis(enumerate(shifted(sig, -1), regime, caps), boundaries, whites);
    b.cur = orbit_basis(enumerate(sig, regime, caps), boundaries, whites);
    b.next = orbit_basis(enumerate(shifted(sig, 1), regime, caps), boundaries, whites);
    b.d_in = assemble(b.prev, b.cur);
    b.d_out = assemble(b.cur, b.next);
    b.h = cohomology_basis(b.d_in, b.d_out);
    return b;
}

Reduction reduce(const IsotypicBlock& b, const FormalSum& x) {
    if (x.empty()) {
        Reduction r;
        r.method = "rational";
        r.cocycle = r.exact = true;
        r.coordinates.assign(b.h.reps.size(), 0);
        r.witness = std::vector<Q>(b.prev.size(), 0);
        return r;
    }
    if (*x.signature() != b.sig) throw std::invalid_argument("sum outside block " + b.sig.str());
    return reduce(b.h, b.d_in, b.d_out, coordinates(x, b.cur));
}

}  // namespace rgra
