#include "rgra/io.hpp"

#include <sstream>

namespace rgra {

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

std::string from_hex(const std::string& hex) {
    if (hex.size() % 2) throw FormatError("odd hex length");
    auto val = [](char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw FormatError("bad hex digit");
    };
    std::string out(hex.size() / 2, '\0');
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<char>(val(hex[2 * i]) * 16 + val(hex[2 * i + 1]));
    return out;
}

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw FormatError("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

namespace {

const char* regime_name(Regime r) { return r == Regime::AtLeastThree ? "ge3" : "full"; }

Regime regime_from(const std::string& s) {
    if (s == "ge3") return Regime::AtLeastThree;
    if (s == "full") return Regime::Full;
    throw FormatError("unknown regime '" + s + "'");
}

const char* character_name(Character c) { return c == Character::Sign ? "sign" : "trivial"; }

}  // namespace

json to_json(const Signature& s) {
    return {{"d", s.d}, {"m", s.m}, {"n", s.n}, {"g", s.g}, {"degree", s.degree}};
}

Signature signature_from_json(const json& j) {
    return Signature{j.at("d").get<int>(), j.at("m").get<int>(), j.at("n").get<int>(), j.at("g").get<int>(),
                     j.at("degree").get<int>()};
}

json to_json(const FormalSum& s) {
    json j;
    j["signature"] = s.signature() ? to_json(*s.signature()) : json(nullptr);
    json terms = json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back({{"graph", to_hex(k)}, {"coefficient", to_string(c)}});
    j["terms"] = std::move(terms);
    return j;
}

FormalSum formal_sum_from_json(const json& j) {
    FormalSum s;
    for (const auto& t : j.at("terms"))
        s.add_key(from_hex(t.at("graph").get<std::string>()), parse_rational(t.at("coefficient").get<std::string>()));
    return s;
}

json to_json(const Basis& b) {
    json keys = json::array();
    for (const auto& k : b.keys) keys.push_back(to_hex(k));
    return {{"signature", to_json(b.sig)}, {"regime", regime_name(b.regime)}, {"size", b.size()}, {"keys", keys}};
}

Basis basis_from_json(const json& j) {
    Basis b;
    b.sig = signature_from_json(j.at("signature"));
    b.regime = regime_from(j.at("regime").get<std::string>());
    for (const auto& k : j.at("keys")) {
        b.index.emplace(from_hex(k.get<std::string>()), static_cast<int>(b.keys.size()));
        b.keys.push_back(from_hex(k.get<std::string>()));
    }
    return b;
}

std::string to_triplets(const SparseMatrix& m) {
    std::ostringstream os;
    os << m.rows << ' ' << m.cols << ' ' << m.nnz() << '\n';
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col[j]) os << i << ' ' << j << ' ' << v << '\n';
    return os.str();
}

SparseMatrix matrix_from_triplets(const std::string& text) {
    std::istringstream is(text);
    long rows, cols, nnz;
    if (!(is >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) throw FormatError("bad triplet header");
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long k = 0; k < nnz; ++k) {
        long i, j, v;
        if (!(is >> i >> j >> v)) throw FormatError("truncated triplet data");
        if (i < 0 || i >= rows || j < 0 || j >= cols) throw FormatError("triplet index out of range");
        m.col[j].emplace_back(static_cast<int>(i), v);
    }
    for (auto& c : m.col) compress(c);
    return m;
}

json to_json(const CohomologyTable& t) {
    json entries = json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"signature", to_json(e.sig)},
                           {"basis", e.basis},
                           {"rank_in", e.rank_in},
                           {"rank_out", e.rank_out},
                           {"dimension", e.dimension},
                           {"verified", e.verified},
                           {"scalars", e.verified ? "Q" : "Z/p"}});
    return {{"primes", t.primes}, {"entries", entries}, {"gaps", t.gaps}};
}

CohomologyTable table_from_json(const json& j) {
    CohomologyTable t;
    t.primes = j.at("primes").get<std::vector<std::uint32_t>>();
    t.gaps = j.at("gaps").get<std::vector<int>>();
    for (const auto& e : j.at("entries")) {
        CohomologyEntry c;
        c.sig = signature_from_json(e.at("signature"));
        c.basis = e.at("basis").get<long>();
        c.rank_in = e.at("rank_in").get<long>();
        c.rank_out = e.at("rank_out").get<long>();
        c.dimension = e.at("dimension").get<long>();
        c.verified = e.at("verified").get<bool>();
        t.entries.push_back(c);
    }
    return t;
}

std::string to_csv(const CohomologyTable& t, bool header) {
    std::ostringstream os;
    if (header) os << "d,m,n,g,degree,dimension,verified\n";
    for (const auto& e : t.entries)
        os << e.sig.d << ',' << e.sig.m << ',' << e.sig.n << ',' << e.sig.g << ',' << e.sig.degree << ','
           << e.dimension << ',' << (e.verified ? "true" : "false") << '\n';
    return os.str();
}

json to_json(const std::vector<Q>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::vector<Q> rationals_from_json(const json& j) {
    std::vector<Q> v;
    for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

json to_json(const GraphReduction& r) {
    json j;
    j["signature"] = to_json(r.sig);
    j["regime"] = regime_name(r.regime);
    if (r.symmetrized)
        j["characters"] = {{"boundaries", character_name(r.boundaries)}, {"whites", character_name(r.whites)}};
    j["cocycle"] = r.r.cocycle;
    j["method"] = r.r.method;
    j["nonzero"] = r.r.nonzero;
    j["exact"] = r.r.exact;
    if (r.r.method == "rational") {
        j["coordinates"] = to_json(r.r.coordinates);
        j["representatives"] = r.reps.size();
    } else {
        j["certificate"] = {{"prime", r.r.prime},
                            {"rank_prev_mod_p", r.r.rank_prev},
                            {"rank_in_mod_p", r.r.rank_in},
                            {"argument", "d_in d_prev = 0 over Z; H^(k-1) = 0 mod p gives rank_Q d_in = rank_p d_in; "
                                         "x outside the span of d_in mod p"}};
    }
    if (r.r.exact) j["witness"] = to_json(r.witness);
    return j;
}

json to_json(const RelationReport& r) {
    json rel = json::array();
    for (const auto& x : r.relations) {
        json j{{"id", x.id},
               {"passed", x.passed},
               {"criterion", x.criterion},
               {"element_terms", x.element.size()},
               {"exact", x.exact},
               {"primitive_valid", x.primitive_valid},
               {"witness_found", x.witness.has_value()},
               {"note", x.note}};
        j["residual"] = to_json(x.residual);
        rel.push_back(std::move(j));
    }
    return {{"all_passed", r.all_passed()}, {"relations", rel}};
}

json to_json(const OrdinaryGraph& g) {
    json e = json::array();
    for (auto [a, b] : g.edges) e.push_back({a, b});
    return {{"vertices", g.vertices}, {"edges", e}, {"d", g.d}, {"directed", g.directed},
            {"orientation", g.d % 2 == 0 ? "edge order" : (g.directed ? "vertex order" : "vertex order and edge directions")}};
}

OrdinaryGraph ordinary_graph_from_json(const json& j) {
    OrdinaryGraph g;
    g.vertices = j.at("vertices").get<int>();
    g.d = j.value("d", 0);
    g.directed = j.value("directed", false);
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices || a == b) throw FormatError("bad edge");
        g.edges.emplace_back(a, b);
    }
    return g;
}

json to_json(const DecoratedGraph& g) {
    json v = json::array(), e = json::array(), o = json::array(), in = json::array();
    for (const auto& s : g.vertices) v.push_back(to_json(s));
    for (const auto& x : g.edges) e.push_back({{"from", x.from}, {"out", x.out}, {"to", x.to}, {"in", x.in}});
    for (const auto& l : g.outputs) o.push_back({{"vertex", l.vertex}, {"slot", l.slot}});
    for (const auto& l : g.inputs) in.push_back({{"vertex", l.vertex}, {"slot", l.slot}});
    return {{"vertices", v}, {"edges", e}, {"outputs", o}, {"inputs", in}, {"loop_number", g.loop_number()}};
}

json to_json(const DefElement& x) {
    json b = json::array();
    for (const auto& [mn, v] : x.blocks) b.push_back({{"m", mn.first}, {"n", mn.second}, {"coordinates", to_json(v)}});
    return {{"genus", x.g}, {"degree", x.degree}, {"blocks", b}};
}

json to_json(const TheoremCReport& r) {
    json fq = json::array();
    const char* names[3] = {"(2,2)", "(3,1)", "(4,0)"};
    for (int s = 0; s < 3; ++s)
        for (const auto& t : r.fq_terms[s]) {
            json legs = json::array();
            for (auto [a, b] : t.legs) legs.push_back({a, b});
            fq.push_back({{"block", names[s]}, {"coefficient", t.coefficient}, {"legs", legs}});
        }
    json pre = json::array();
    for (const auto& [mn, d] : r.preimage_blocks) pre.push_back({{"m", mn.first}, {"n", mn.second}, {"dimension", d}});
    json out = json::array();
    for (auto [m, n] : r.delta_targets_outside) out.push_back({m, n});
    return {{"truncation", {{"genus", 1}, {"max_legs", 4}}},
            {"fq_terms", fq},
            {"element", to_json(r.element)},
            {"cocycle_in_truncation", r.cocycle_in_truncation},
            {"delta_targets_outside", out},
            {"theta_theta_block", r.theta_theta_block},
            {"theta_theta_class_zero", r.theta_theta_class_zero},
            {"preimage_blocks", pre},
            {"not_exact", r.not_exact}};
}

}  // namespace rgra
