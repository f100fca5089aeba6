// Command-line front end: bases, differentials, cohomology tables, the
// properadic compositions, the relation checks and the Def complex, with a
// content-addressed cache for everything that is expensive.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "rgra/basis.hpp"
#include "rgra/complex.hpp"
#include "rgra/def.hpp"
#include "rgra/differential.hpp"
#include "rgra/gc.hpp"
#include "rgra/io.hpp"
#include "rgra/linalg.hpp"
#include "rgra/properad.hpp"
#include "rgra/qlb.hpp"
#include "rgra/reduce.hpp"
#include "rgra/store.hpp"

using namespace rgra;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;
// Completed, but a checked property does not hold.
constexpr int kExitCheckFailed = 1;

struct Partial : std::runtime_error {
    std::string output;
    Partial(const std::string& what, std::string out) : std::runtime_error(what), output(std::move(out)) {}
};

struct SigArgs {
    int d = 0, m = 1, n = 0, g = 0, degree = 0;
    std::string regime = "ge3";

    void add(CLI::App* app, bool with_degree) {
        app->add_option("--d", d, "parameter d")->capture_default_str();
        app->add_option("--m", m, "boundaries")->required();
        app->add_option("--n", n, "white vertices")->required();
        app->add_option("--g", g, "genus")->required();
        if (with_degree) app->add_option("--degree", degree, "cohomological degree")->required();
        app->add_option("--regime", regime, "ge3 or full")->check(CLI::IsMember({"ge3", "full"}))->capture_default_str();
    }
    Regime reg() const { return regime == "full" ? Regime::Full : Regime::AtLeastThree; }
    Signature sig() const { return Signature{d, m, n, g, degree}; }
};

struct Context {
    std::string config_path;
    std::string cache_dir;
    bool no_cache = false;
    std::string out_path;
    JobConfig config;
    std::unique_ptr<Cache> cache;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void load() {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read config " + config_path);
            config = config_from_json(json::parse(in));
        }
        if (!cache_dir.empty()) config.cache_root = cache_dir;
        config.validate();
        if (!no_cache) cache = std::make_unique<Cache>(config.effective_cache_root());
    }
    RankOptions rank_options() const {
        RankOptions o;
        o.primes = config.effective_primes();
        o.certify = config.certify;
        o.caps = config.caps;
        return o;
    }
    bool over_budget() const {
        return config.time_budget_seconds > 0 &&
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
                   config.time_budget_seconds;
    }
    void emit(const std::string& text) const {
        if (out_path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + out_path);
    }
    // Looks up a certificate or table by description, computing and storing
    // it on a miss.
    template <class F>
    std::string memo(PayloadKind kind, const std::string& desc, F&& compute) {
        if (cache)
            if (auto hit = cache->get(kind, desc)) return *hit;
        std::string text = compute();
        if (cache) cache->put(kind, desc, text);
        return text;
    }
};

std::string describe_primes(const std::vector<std::uint32_t>& ps) {
    std::string s;
    for (auto p : ps) s += std::to_string(p) + ";";
    return s;
}

CohomologyTable table_for(Context& ctx, int d, int m, int n, int g, Regime regime, int lo, int hi) {
    CohomologyTable t;
    RankOptions opt = ctx.rank_options();
    t.primes = opt.primes;
    for (int k = lo; k <= hi; ++k) {
        if (ctx.over_budget()) {
            t.gaps.push_back(k);
            continue;
        }
        try {
            auto e = cohomology(d, m, n, g, regime, k, k, opt);
            t.entries.insert(t.entries.end(), e.begin(), e.end());
        } catch (const CapExceeded&) {
            t.gaps.push_back(k);
        }
    }
    return t;
}

std::string render_table(const CohomologyTable& t, const std::string& format) {
    return format == "csv" ? to_csv(t) : to_json(t).dump(2) + "\n";
}

FormalSum generator(const std::string& name, int d) {
    if (name == "bracket") return bracket_rep(d);
    if (name == "cobracket") return cobracket_rep(d);
    if (name == "trio") return trio_rep(d);
    throw std::invalid_argument("unknown generator '" + name + "' (bracket, cobracket, trio)");
}

DecoratedGraph decorated_from_json(const json& j, int d) {
    DecoratedGraph g;
    for (const auto& v : j.at("vertices")) g.vertices.push_back(generator(v.get<std::string>(), d));
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at("from").get<int>(), e.at("out").get<int>(), e.at("to").get<int>(), e.at("in").get<int>()});
    for (const auto& l : j.value("outputs", json::array())) g.outputs.push_back({l.at("vertex").get<int>(), l.at("slot").get<int>()});
    for (const auto& l : j.value("inputs", json::array())) g.inputs.push_back({l.at("vertex").get<int>(), l.at("slot").get<int>()});
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ribbon graph complexes, the gravity properad and the deformation complex of qLB"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx;
    app.add_option("--config", ctx.config_path, "JSON job configuration");
    app.add_option("--cache-dir", ctx.cache_dir, std::string("cache root (default: $") + kCacheEnv + ", then .rgra-cache)");
    app.add_flag("--no-cache", ctx.no_cache, "do not read or write the cache");
    app.add_option("--out", ctx.out_path, "write the result to a file instead of stdout");

    // basis
    auto* basis = app.add_subcommand("basis", "enumerate the basis of one graded piece");
    SigArgs basis_sig;
    basis_sig.add(basis, true);
    bool basis_keys = false;
    basis->add_flag("--keys", basis_keys, "list the canonical keys");

    // diff
    auto* diff = app.add_subcommand("diff", "matrix of d out of one graded piece (triplets)");
    SigArgs diff_sig;
    diff_sig.add(diff, true);
    bool diff_summary = false;
    diff->add_flag("--summary", diff_summary, "print sizes and ranks instead of the matrix");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "cohomology table of one signature");
    SigArgs coh_sig;
    coh_sig.add(coh, false);
    int coh_lo = std::numeric_limits<int>::min(), coh_hi = std::numeric_limits<int>::max();
    std::string coh_format = "json";
    coh->add_option("--lo", coh_lo, "lowest degree");
    coh->add_option("--hi", coh_hi, "highest degree");
    coh->add_option("--format", coh_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    // compose
    auto* comp = app.add_subcommand("compose", "partial composition of generator representatives");
    std::string comp_outer, comp_inner;
    int comp_i = 1, comp_j = 1, comp_d = 0;
    comp->add_option("--outer", comp_outer, "bracket, cobracket or trio")->required();
    comp->add_option("--i", comp_i, "white vertex of outer")->required();
    comp->add_option("--inner", comp_inner, "bracket, cobracket or trio")->required();
    comp->add_option("--j", comp_j, "boundary of inner")->required();
    comp->add_option("--d", comp_d)->capture_default_str();

    // phi
    auto* phic = app.add_subcommand("phi", "composition along a decorated graph");
    std::string phi_family, phi_graph;
    int phi_k = 1;
    bool phi_certify = false;
    phic->add_option("--family", phi_family, "gamma")->check(CLI::IsMember({"gamma"}));
    phic->add_option("--k", phi_k, "member of the family")->capture_default_str();
    phic->add_option("--graph", phi_graph, "decorated graph as JSON (vertices named by generator)");
    phic->add_flag("--certify", phi_certify, "reduce the result to cohomology");

    // verify-qlb
    auto* vq = app.add_subcommand("verify-qlb", "check the quasi-Lie bialgebra relations on the generators");

    // gc
    auto* gc = app.add_subcommand("gc", "Kontsevich graph complex checks");
    int gc_d = 0, gc_v = 6, gc_e = 9;
    bool gc_directed = false, gc_d2 = false, gc_polytopes = false, gc_fq = false;
    std::string gc_graph;
    gc->add_option("--d", gc_d)->capture_default_str();
    gc->add_option("--max-vertices", gc_v)->capture_default_str();
    gc->add_option("--max-edges", gc_e)->capture_default_str();
    gc->add_flag("--directed", gc_directed);
    gc->add_flag("--check-d2", gc_d2, "delta^2 = 0 on all graphs within the bounds");
    gc->add_flag("--polytopes", gc_polytopes, "the triangle and the alternating square are cocycles");
    gc->add_flag("--fq", gc_fq, "F_q image of the alternating square with four legs");
    gc->add_option("--graph", gc_graph, "JSON graph; prints its differential");

    // def
    auto* defc = app.add_subcommand("def", "the deformation complex");
    bool def_thc = false, def_gen = false;
    defc->add_flag("--check-theorem-c", def_thc, "the alternating square through F_q, genus 1, m + n <= 4");
    defc->add_flag("--generators", def_gen, "delta of the generator classes in genus 0");

    // report
    auto* rep = app.add_subcommand("report", "consolidated cohomology dimensions over a range");
    int rep_d = 0, rep_g = 0, rep_legs = -1, rep_m = -1, rep_nmax = -1;
    std::string rep_format = "csv", rep_regime = "ge3";
    rep->add_option("--d", rep_d)->capture_default_str();
    rep->add_option("--g", rep_g)->required();
    rep->add_option("--legs", rep_legs, "all m >= 1 with m + n equal to this");
    rep->add_option("--m", rep_m, "fixed m (with --n-max)");
    rep->add_option("--n-max", rep_nmax, "n from 0 to this (with --m)");
    rep->add_option("--format", rep_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    rep->add_option("--regime", rep_regime)->check(CLI::IsMember({"ge3", "full"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        ctx.load();
        if (*basis) {
            Basis b = cached_basis(ctx.cache.get(), basis_sig.sig(), basis_sig.reg(), ctx.config.caps);
            json j = to_json(b);
            if (!basis_keys) j.erase("keys");
            ctx.emit(j.dump(2) + "\n");
        } else if (*diff) {
            Signature s = diff_sig.sig(), t = s;
            t.degree += 1;
            Basis bs = cached_basis(ctx.cache.get(), s, diff_sig.reg(), ctx.config.caps);
            Basis bt = cached_basis(ctx.cache.get(), t, diff_sig.reg(), ctx.config.caps);
            SparseMatrix mtx = cached_matrix(ctx.cache.get(), bs, bt);
            if (!diff_summary) {
                ctx.emit(to_triplets(mtx));
            } else {
                json j{{"source", to_json(s)}, {"target", to_json(t)}, {"rows", mtx.rows}, {"cols", mtx.cols}, {"nnz", mtx.nnz()}};
                json ranks = json::object();
                for (auto p : ctx.config.effective_primes()) ranks[std::to_string(p)] = rank_mod_p(mtx, p);
                j["rank_mod_p"] = ranks;
                if (ctx.config.certify) j["rank_q"] = rank_q(mtx);
                ctx.emit(j.dump(2) + "\n");
            }
        } else if (*coh) {
            auto [lo, hi] = degree_range(coh_sig.d, coh_sig.m, coh_sig.n, coh_sig.g, coh_sig.reg(), ctx.config.caps.max_half_edges / 2);
            lo = std::max(lo, coh_lo);
            hi = std::min(hi, coh_hi);
            const std::string desc = "cohomology " + Signature{coh_sig.d, coh_sig.m, coh_sig.n, coh_sig.g, 0}.str() + " " +
                                     coh_sig.regime + " " + std::to_string(lo) + ".." + std::to_string(hi) + " primes " +
                                     describe_primes(ctx.config.effective_primes()) + (ctx.config.certify ? " Q" : "");
            std::string text = ctx.memo(PayloadKind::Table, desc + " " + coh_format, [&] {
                CohomologyTable t = table_for(ctx, coh_sig.d, coh_sig.m, coh_sig.n, coh_sig.g, coh_sig.reg(), lo, hi);
                if (!t.gaps.empty()) throw Partial("cap exceeded", render_table(t, coh_format));
                return render_table(t, coh_format);
            });
            ctx.emit(text);
        } else if (*comp) {
            FormalSum s = compose(generator(comp_outer, comp_d), comp_i, generator(comp_inner, comp_d), comp_j);
            ctx.emit(to_json(s).dump(2) + "\n");
        } else if (*phic) {
            if (phi_family.empty() == phi_graph.empty())
                throw std::invalid_argument("phi needs exactly one of --family and --graph");
            std::string desc;
            DecoratedGraph dg;
            if (!phi_family.empty()) {
                dg = gamma_family(phi_k);
                desc = "phi gamma k=" + std::to_string(phi_k);
            } else {
                std::ifstream in(phi_graph);
                if (!in) throw std::invalid_argument("cannot read " + phi_graph);
                json j = json::parse(in);
                dg = decorated_from_json(j, 0);
                desc = "phi graph " + j.dump();
            }
            desc += phi_certify ? " certify" : "";
            desc += " primes " + describe_primes(ctx.config.effective_primes());
            std::string text = ctx.memo(PayloadKind::Certificate, desc, [&] {
                FormalSum s = phi(dg);
                json j{{"decorated_graph_loops", dg.loop_number()}, {"result", to_json(s)}, {"closed", d_twist(s).empty()}};
                if (phi_certify && !s.empty()) {
                    ReduceOptions ro;
                    ro.caps = ctx.config.caps;
                    ro.max_rational = ctx.config.max_rational;
                    ro.prime = ctx.config.effective_primes().front();
                    j["reduction"] = to_json(reduce_to_cohomology(s, Regime::AtLeastThree, ro));
                }
                return j.dump(2) + "\n";
            });
            ctx.emit(text);
        } else if (*vq) {
            std::string text = ctx.memo(PayloadKind::Certificate, "verify-qlb", [] { return to_json(verify_qlb()).dump(2) + "\n"; });
            ctx.emit(text);
            if (!json::parse(text).at("all_passed").get<bool>()) return kExitCheckFailed;
        } else if (*gc) {
            json j = json::object();
            bool ok = true;
            if (gc_d2) {
                auto graphs = all_graphs(gc_v, gc_e, gc_d, gc_directed);
                long nonzero = 0, failures = 0;
                for (const auto& g : graphs) {
                    GCSum s;
                    s.d = gc_d;
                    s.directed = gc_directed;
                    s.add(g, 1);
                    if (s.empty()) continue;
                    ++nonzero;
                    if (!gc_differential(gc_differential(s)).empty()) ++failures;
                }
                j["d2"] = {{"graphs", graphs.size()}, {"nonzero", nonzero}, {"failures", failures}};
                ok = ok && failures == 0;
            }
            if (gc_polytopes) {
                const bool tri = gc_differential(triangle(gc_d % 2 ? gc_d : 1)).empty();
                const bool sq = gc_differential(alternating_square()).empty();
                j["polytopes"] = {{"triangle_cocycle", tri}, {"alternating_square_cocycle", sq}};
                ok = ok && tri && sq;
            }
            if (gc_fq) {
                json terms = json::array();
                for (auto [m, n] : {std::pair{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}})
                    for (const auto& t : fq_image(alternating_square(), m, n)) {
                        json legs = json::array();
                        for (auto [a, b] : t.legs) legs.push_back({a, b});
                        terms.push_back({{"m", m}, {"n", n}, {"coefficient", t.coefficient}, {"legs", legs}});
                    }
                j["fq"] = terms;
            }
            if (!gc_graph.empty()) {
                std::ifstream in(gc_graph);
                if (!in) throw std::invalid_argument("cannot read " + gc_graph);
                OrdinaryGraph g = ordinary_graph_from_json(json::parse(in));
                GCSum s = gc_differential(g);
                json terms = json::array();
                for (const auto& [k, c] : s.terms)
                    terms.push_back({{"graph", to_json(decode_ordinary(k, s.d, s.directed))}, {"coefficient", to_string(c)}});
                j["graph"] = to_json(g);
                j["degree"] = g.degree();
                j["differential"] = terms;
            }
            ctx.emit(j.dump(2) + "\n");
            if (!ok) return kExitCheckFailed;
        } else if (*defc) {
            if (!def_thc && !def_gen) throw std::invalid_argument("def needs --check-theorem-c or --generators");
            json j = json::object();
            if (def_thc) {
                std::string text = ctx.memo(PayloadKind::Certificate, "def theorem-c g=1 legs<=4",
                                            [] { return to_json(check_theorem_c()).dump(2); });
                j["theorem_c"] = json::parse(text);
            }
            if (def_gen) {
                std::string text = ctx.memo(PayloadKind::Certificate, "def generators g=0 legs<=5", [] {
                    DefComplex def(0, 5);
                    json out = json::array();
                    const std::pair<int, int> gens[3] = {{1, 2}, {2, 1}, {3, 0}};
                    const char* names[3] = {"bracket", "cobracket", "trio"};
                    for (int s = 0; s < 3; ++s) {
                        const FormalSum rep = generator(names[s], 0);
                        const int deg = rep.signature()->degree - gens[s].first + 1;
                        DefElement x = def.reduce({{gens[s], rep}}, deg);
                        out.push_back({{"generator", names[s]}, {"class", to_json(x)}, {"delta", to_json(def.differential(x))}});
                    }
                    return out.dump(2);
                });
                j["generators"] = json::parse(text);
            }
            ctx.emit(j.dump(2) + "\n");
        } else if (*rep) {
            std::vector<std::pair<int, int>> sigs;
            if (rep_legs >= 0) {
                for (int m = 1; m <= rep_legs; ++m) sigs.emplace_back(m, rep_legs - m);
            } else if (rep_m >= 1 && rep_nmax >= 0) {
                for (int n = 0; n <= rep_nmax; ++n) sigs.emplace_back(rep_m, n);
            } else if (rep_legs != -1 || rep_m != -1 || rep_nmax != -1) {
                throw std::invalid_argument("report needs --legs, or --m with --n-max");
            }
            const Regime regime = rep_regime == "full" ? Regime::Full : Regime::AtLeastThree;
            CohomologyTable all;
            all.primes = ctx.config.effective_primes();
            for (auto [m, n] : sigs) {
                if (2 * rep_g - 2 + m + n <= 0) continue;  // unstable
                auto [lo, hi] = degree_range(rep_d, m, n, rep_g, regime, ctx.config.caps.max_half_edges / 2);
                const std::string desc = "report-part " + Signature{rep_d, m, n, rep_g, 0}.str() + " " + rep_regime +
                                         " primes " + describe_primes(all.primes) + (ctx.config.certify ? " Q" : "");
                std::string text = ctx.memo(PayloadKind::Table, desc, [&] {
                    CohomologyTable t = table_for(ctx, rep_d, m, n, rep_g, regime, lo, hi);
                    if (!t.gaps.empty()) throw Partial("cap exceeded", to_json(t).dump());
                    return to_json(t).dump();
                });
                CohomologyTable t = table_from_json(json::parse(text));
                for (const auto& e : t.entries)
                    if (e.dimension != 0) all.entries.push_back(e);
            }
            ctx.emit(render_table(all, rep_format));
        }
    } catch (const Partial& p) {
        ctx.emit(p.output);
        std::cerr << "error: " << p.what() << " (partial results, gaps listed)\n";
        return kExitCap;
    } catch (const CapExceeded& e) {
        std::cerr << "error: cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const CacheCorrupt& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const NotACocycle& e) {
        std::cerr << "error: " << e.what() << " (" << e.residual.size() << " graphs in d)\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
