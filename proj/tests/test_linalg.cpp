#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rgra/linalg.hpp"
#include "rgra/reduce.hpp"
#include "rgra/sparse.hpp"
#include "support.hpp"

using namespace rgra;

namespace {

SparseMatrix random_matrix(int rows, int cols, double density, int range, std::mt19937_64& gen) {
    SparseMatrix m(rows, cols);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> v(-range, range);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i)
            if (u(gen) < density) m.col[j].emplace_back(i, v(gen));
        compress(m.col[j]);
    }
    return m;
}

// A matrix of prescribed low rank: a product of random factors.
SparseMatrix low_rank(int rows, int cols, int r, std::mt19937_64& gen) {
    return multiply(random_matrix(rows, r, 0.6, 3, gen), random_matrix(r, cols, 0.6, 3, gen));
}

}  // namespace

TEST_CASE("property: sparse ranks agree with the dense oracle") {
    auto gen = test::rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 14);
        const int rows = dim(gen), cols = dim(gen);
        SparseMatrix m = trial % 2 ? random_matrix(rows, cols, 0.3, 4, gen)
                                   : low_rank(rows, cols, std::min(rows, cols) / 2 + 1, gen);
        const long oracle = test::dense_rank(test::to_dense(m));
        CHECK(rank_q(m) == oracle);
        CHECK(rank_mod_p(m, 1073741789u) == oracle);
        CHECK(rank_q(m.transpose()) == oracle);
    }
}

TEST_CASE("rank mod a small prime can drop") {
    SparseMatrix m(1, 1);
    m.col[0].emplace_back(0, 7);
    CHECK(rank_q(m) == 1);
    CHECK(rank_mod_p(m, 7) == 0);
}

TEST_CASE("property: solutions satisfy the system") {
    auto gen = test::rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        SparseMatrix a = low_rank(10, 8, 4, gen);
        std::vector<Q> y(8);
        std::uniform_int_distribution<int> v(-5, 5);
        for (auto& t : y) {
            t = Q(v(gen), 1 + (v(gen) + 5) % 3);
            t.canonicalize();
        }
        std::vector<Q> b = rgra::apply(a, y);
        auto x = solve_q(a, b);
        REQUIRE(x);
        CHECK(rgra::apply(a, *x) == b);
        CHECK(in_column_span_mod_p(a, b, 1073741789u));
        auto xp = solve_mod_p(a, b, 1073741789u);
        CHECK(xp.has_value());
    }
}

TEST_CASE("inconsistent systems give a separating covector") {
    SparseMatrix a(2, 1);
    a.col[0] = {{0, 1}, {1, 1}};
    std::vector<Q> b{1, 0};
    CHECK_FALSE(solve_q(a, b));
    auto c = separating_covector(a, b);
    REQUIRE(c);
    Q cb = 0, ca = 0;
    for (int i = 0; i < 2; ++i) {
        cb += (*c)[i] * b[i];
        ca += (*c)[i] * Q(1);
    }
    CHECK(ca == 0);
    CHECK(cb != 0);
}

TEST_CASE("property: kernel vectors span the kernel") {
    auto gen = test::rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        SparseMatrix a = low_rank(7, 9, 1 + trial % 5, gen);
        auto ker = kernel_q(a);
        CHECK(static_cast<long>(ker.size()) == 9 - rank_q(a));
        for (const auto& v : ker) {
            for (const auto& e : rgra::apply(a, v)) CHECK(e == 0);
        }
        CHECK(test::dense_rank(ker) == static_cast<long>(ker.size()));
    }
}

TEST_CASE("greedy selection modulo a column span") {
    SparseMatrix a(3, 1);
    a.col[0] = {{0, 1}};
    std::vector<std::vector<Q>> cand{{2, 0, 0}, {0, 1, 0}, {1, 2, 0}, {0, 0, 1}};
    CHECK(greedy_independent_modulo(a, cand) == std::vector<int>{1, 3});
}

TEST_CASE("cohomology basis of a small complex") {
    // C0 = Q -> C1 = Q^2 -> C2 = Q, d0 = (1,0), d1 = (0,0)
    SparseMatrix d_in(2, 1), d_out(1, 2);
    d_in.col[0] = {{0, 1}};
    auto h = cohomology_basis(d_in, d_out);
    CHECK(h.dimension() == 1);
    CHECK(h.reps[0] == std::vector<Q>{0, 1});
    auto r = reduce(h, d_in, d_out, std::vector<Q>{3, 5});
    CHECK(r.cocycle);
    CHECK(r.coordinates == std::vector<Q>{5});
    REQUIRE(r.witness);
    auto ex = reduce(h, d_in, d_out, std::vector<Q>{3, 0});
    CHECK(ex.exact);
    CHECK_FALSE(ex.nonzero);
    SparseMatrix d_out2(1, 2);
    d_out2.col[1] = {{0, 1}};
    auto nc = reduce(cohomology_basis(d_in, d_out2), d_in, d_out2, std::vector<Q>{0, 1});
    CHECK_FALSE(nc.cocycle);
}

TEST_CASE("modular certificate") {
    SparseMatrix d_prev(1, 0), d_in(2, 1);
    d_in.col[0] = {{0, 1}};
    auto r = reduce_modular(d_prev, d_in, std::vector<Q>{0, 1}, 1073741789u);
    REQUIRE(r);
    CHECK(r->nonzero);
    CHECK(r->method == "modular");
    // H^(k-1) does not vanish: no certificate
    SparseMatrix zero_in(2, 1);
    CHECK_FALSE(reduce_modular(d_prev, zero_in, std::vector<Q>{0, 1}, 1073741789u));
}

TEST_CASE("sparse helpers") {
    std::vector<SparseMatrix::Entry> v{{2, 1}, {0, 3}, {2, -1}, {1, 0}};
    compress(v);
    CHECK(v == std::vector<SparseMatrix::Entry>{{0, 3}});
    auto gen = test::rng(13);
    SparseMatrix a = random_matrix(5, 6, 0.4, 3, gen);
    CHECK(a.transpose().transpose() == a);
}
