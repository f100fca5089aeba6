#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rgra/basis.hpp"
#include "rgra/canonical.hpp"
#include "rgra/formal_sum.hpp"
#include "rgra/properad.hpp"
#include "rgra/ribbon_graph.hpp"
#include "support.hpp"

using namespace rgra;

namespace {

// One edge between white vertices 1 and 2.
RibbonGraph segment(int d = 0) { return build_graph(d, {{1, {0}}, {2, {1}}}, {{0, 1}}, {{0, 1}}); }

// Black trivalent vertex with a loop, joined to white 1.
RibbonGraph tadpole(int d = 0) {
    return build_graph(d, {{1, {0}}, {0, {1, 2, 3}}}, {{0, 1}, {2, 3}}, {{0, 1}, {2, 2}});
}

std::vector<Signature> small_signatures() {
    std::vector<Signature> out;
    for (int g = 0; g <= 1; ++g)
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n + m <= 3; ++n)
                for (int k = 1; k <= 6; ++k) out.push_back({0, m, n, g, k});
    return out;
}

}  // namespace

TEST_CASE("metrics of small graphs") {
    auto s = signature(segment());
    CHECK(s.m == 1);
    CHECK(s.n == 2);
    CHECK(s.g == 0);
    CHECK(s.degree == 1);
    auto t = metrics(tadpole());
    CHECK(t.boundaries == 2);
    CHECK(t.black == 1);
    CHECK(t.genus == 0);
    CHECK(t.degree == 2);
    CHECK(validate(tadpole(), Regime::AtLeastThree).ok);
}

TEST_CASE("degree shifts by d(2g-2+m+n)") {
    for (int d : {1, 2, 3}) {
        auto s0 = signature(tadpole(0)), sd = signature(tadpole(d));
        CHECK(sd.degree == s0.degree - d * (2 * s0.g - 2 + s0.m + s0.n));
    }
}

TEST_CASE("validation rejects broken involutions") {
    RibbonGraph g = segment();
    g.tau[0] = 0;
    CHECK_FALSE(validate(g).ok);
    RibbonGraph bad = build_graph(0, {{1, {0}}, {0, {1, 2}}, {2, {3}}}, {{0, 1}, {2, 3}}, {{0, 1}});
    CHECK_FALSE(validate(bad, Regime::AtLeastThree).ok);
    CHECK(validate(bad, Regime::Full).ok);
}

TEST_CASE("decode inverts canonicalize") {
    for (const auto& sig : small_signatures()) {
        Basis b = enumerate(sig);
        for (const auto& k : b.keys) {
            RibbonGraph g = decode(k);
            auto cf = canonicalize(g);
            REQUIRE_FALSE(cf.zero);
            CHECK(cf.key == k);
            CHECK(cf.sign == 1);
            CHECK(key_signature(k) == sig);
            CHECK(key_num_edges(k) == sig.num_edges());
        }
    }
}

TEST_CASE("property: canonical form is invariant under renumbering half-edges") {
    auto gen = test::rng(1);
    for (int d : {0, 1}) {
        for (const auto& sig0 : small_signatures()) {
            Signature sig = sig0;
            sig.d = d;
            sig.degree = sig0.num_edges() - d * (2 * sig.g - 2 + sig.m + sig.n);
            Basis b = enumerate(sig);
            for (const auto& k : b.keys) {
                RibbonGraph g = decode(k);
                for (int trial = 0; trial < 3; ++trial) {
                    auto pos = test::random_permutation(g.num_half_edges(), gen);
                    auto cf = canonicalize(test::renumber(g, pos));
                    CHECK(cf.key == k);
                    CHECK(cf.sign == 1);
                }
            }
        }
    }
}

TEST_CASE("property: swapping two edges in the order flips the sign") {
    auto gen = test::rng(2);
    for (const auto& sig : small_signatures()) {
        Basis b = enumerate(sig);
        for (const auto& k : b.keys) {
            RibbonGraph g = decode(k);
            if (g.num_edges() < 2) continue;
            std::uniform_int_distribution<int> pick(0, g.num_edges() - 1);
            int a = pick(gen), c = pick(gen);
            if (a == c) c = (a + 1) % g.num_edges();
            std::swap(g.orientation.edges[a], g.orientation.edges[c]);
            auto cf = canonicalize(g);
            CHECK(cf.key == k);
            CHECK(cf.sign == -1);
            FormalSum s(decode(k));
            s.add(g);
            CHECK(s.empty());
        }
    }
}

TEST_CASE("graphs with an orientation-reversing automorphism are zero") {
    // One white vertex with two interleaved loops (genus 1): the rotation by
    // one step swaps the loops, an odd automorphism for even d.
    RibbonGraph g = build_graph(0, {{1, {0, 2, 1, 3}}}, {{0, 1}, {2, 3}}, {{0, 1}});
    CHECK(signature(g).g == 1);
    CHECK(canonicalize(g).zero);
    CHECK(FormalSum(g).empty());
}

TEST_CASE("white relabeling round trip") {
    RibbonGraph g = segment();
    RibbonGraph h = relabel_whites(relabel_whites(g, {0, 2, 1}), {0, 2, 1});
    CHECK(canonicalize(h).key == canonicalize(g).key);
    CHECK(canonicalize(h).sign == canonicalize(g).sign);
}

TEST_CASE("formal sums cancel and scale") {
    FormalSum a(tadpole()), b(tadpole(), 3);
    FormalSum c = b - 3 * a;
    CHECK(c.empty());
    CHECK((a + a).coefficient(canonicalize(tadpole()).key) == 2);
    CHECK(a.signature()->m == 2);
    FormalSum mixed(tadpole());
    CHECK_THROWS(mixed.add(segment()));
}

TEST_CASE("permutation parity") {
    CHECK(permutation_parity({0, 1, 2}) == 1);
    CHECK(permutation_parity({1, 0, 2}) == -1);
    CHECK(permutation_parity({1, 2, 0}) == 1);
}
