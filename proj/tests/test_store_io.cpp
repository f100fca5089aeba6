#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "rgra/io.hpp"
#include "rgra/properad.hpp"
#include "rgra/store.hpp"
#include "support.hpp"

using namespace rgra;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        auto gen = test::rng(static_cast<std::uint64_t>(::getpid()));
        path = fs::temp_directory_path() / ("rgra-test-" + std::to_string(gen()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("hex and rationals") {
    CHECK(to_hex(std::string("\x00\xff\x10", 3)) == "00ff10");
    CHECK(from_hex("00ff10") == std::string("\x00\xff\x10", 3));
    CHECK_THROWS_AS(from_hex("0"), FormatError);
    CHECK_THROWS_AS(from_hex("zz"), FormatError);
    CHECK(parse_rational("-6/4") == Q(-3, 2));
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("x"), FormatError);
}

TEST_CASE("formal sums and bases round trip through JSON") {
    FormalSum s = compose(cobracket_rep(), 1, bracket_rep(), 1);
    s *= Q(3, 2);
    CHECK(formal_sum_from_json(json::parse(to_json(s).dump())) == s);
    Basis b = enumerate(Signature{0, 1, 3, 0, 3});
    Basis c = basis_from_json(json::parse(to_json(b).dump()));
    CHECK(c.keys == b.keys);
    CHECK(c.sig == b.sig);
    CHECK(c.find(b.keys.back()) == static_cast<int>(b.size()) - 1);
}

TEST_CASE("matrices round trip through triplets") {
    Basis a = enumerate(Signature{0, 1, 3, 0, 2}), b = enumerate(Signature{0, 1, 3, 0, 3});
    SparseMatrix m = assemble(a, b);
    const std::string text = to_triplets(m);
    CHECK(matrix_from_triplets(text) == m);
    CHECK(text.rfind(std::to_string(m.rows) + " " + std::to_string(m.cols), 0) == 0);
    CHECK_THROWS_AS(matrix_from_triplets("2 2 1\n5 0 1\n"), FormatError);
    CHECK_THROWS_AS(matrix_from_triplets("2 2 2\n0 0 1\n"), FormatError);
}

TEST_CASE("tables in JSON and CSV") {
    CohomologyTable t;
    t.primes = {1073741789u};
    t.entries = cohomology(0, 1, 3, 0, Regime::AtLeastThree, 2, 3);
    t.gaps = {4};
    CohomologyTable u = table_from_json(json::parse(to_json(t).dump()));
    CHECK(u.entries.size() == t.entries.size());
    CHECK(u.gaps == t.gaps);
    CHECK(to_json(u).dump() == to_json(t).dump());
    const std::string csv = to_csv(t);
    CHECK(csv.rfind("d,m,n,g,degree,dimension,verified\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(t.entries.size()) + 1);
}

TEST_CASE("primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(1073741789u));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(1073741789ull * 3));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
    auto a = random_primes(7, 3), b = random_primes(7, 3), c = random_primes(8, 3);
    CHECK(a == b);
    CHECK(a != c);
    for (auto p : a) {
        CHECK(is_prime(p));
        CHECK(p >= (1u << 29));
        CHECK(p < (1u << 30));
    }
}

TEST_CASE("configuration") {
    JobConfig c = config_from_json(json::parse(R"({"primes": [1073741789], "seed": 5, "certify": true})"));
    CHECK(c.primes == std::vector<std::uint32_t>{1073741789u});
    CHECK(c.certify);
    CHECK(config_from_json(to_json(c)).seed == 5);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"primes": [65521]})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"primes": [1073741790]})")), ConfigError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"caps": {"max_half_edges": 0}})")), ConfigError);
    JobConfig d;
    CHECK(d.effective_primes() == random_primes(d.seed, 2));
    d.cache_root = "/x";
    CHECK(d.effective_cache_root() == fs::path("/x"));
}

TEST_CASE("cache entries are hashed, immutable and listed in the manifest") {
    TempDir dir;
    Cache cache(dir.path);
    CHECK_FALSE(cache.get(PayloadKind::Table, "t"));
    auto e = cache.put(PayloadKind::Table, "t", "payload\n");
    CHECK(cache.get(PayloadKind::Table, "t") == std::optional<std::string>("payload\n"));
    CHECK(e.payload_sha256 == sha256_hex("payload\n"));
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    // a second put with other content leaves the entry alone
    cache.put(PayloadKind::Table, "t", "other");
    CHECK(cache.get(PayloadKind::Table, "t") == std::optional<std::string>("payload\n"));
    // keys depend on the kind and the description
    CHECK(cache.key_for(PayloadKind::Table, "t") != cache.key_for(PayloadKind::Matrix, "t"));
    CHECK(cache.key_for(PayloadKind::Table, "t") != cache.key_for(PayloadKind::Table, "u"));
    auto man = cache.manifest();
    REQUIRE(man.size() == 1);
    CHECK(man[0].at("key") == e.key);
    CHECK(man[0].at("sha256") == e.payload_sha256);
    // no temporary files are left behind
    for (const auto& f : fs::recursive_directory_iterator(dir.path))
        CHECK(f.path().filename().string().find(".tmp.") == std::string::npos);
}

TEST_CASE("corrupted cache entries are detected") {
    TempDir dir;
    Cache cache(dir.path);
    auto e = cache.put(PayloadKind::Certificate, "c", "{\"ok\": true}");
    std::string text = slurp(e.path);
    text.back() = 'X';
    std::ofstream(e.path, std::ios::binary | std::ios::trunc) << text;
    CHECK_THROWS_AS(cache.get(PayloadKind::Certificate, "c"), CacheCorrupt);
    std::ofstream(e.path, std::ios::binary | std::ios::trunc) << "garbage";
    CHECK_THROWS_AS(cache.get(PayloadKind::Certificate, "c"), CacheCorrupt);
}

TEST_CASE("cached bases and matrices equal fresh ones") {
    TempDir dir;
    Cache cache(dir.path);
    const Signature s{0, 1, 3, 0, 2}, t{0, 1, 3, 0, 3};
    Basis cold = cached_basis(&cache, s, Regime::AtLeastThree, {});
    Basis warm = cached_basis(&cache, s, Regime::AtLeastThree, {});
    CHECK(cold.keys == warm.keys);
    CHECK(warm.keys == enumerate(s).keys);
    Basis bt = cached_basis(&cache, t, Regime::AtLeastThree, {});
    SparseMatrix m1 = cached_matrix(&cache, cold, bt), m2 = cached_matrix(&cache, warm, bt);
    CHECK(m1 == m2);
    CHECK(m1 == assemble(cold, bt));
    CHECK(cache.manifest().size() == 3);
}

TEST_CASE("JSON for the reports") {
    json r = to_json(reduce_to_cohomology(bracket_rep()));
    CHECK(r.at("method") == "rational");
    CHECK(r.at("nonzero") == true);
    OrdinaryGraph g{1, false, 3, {{0, 1}, {1, 2}, {2, 0}}};
    OrdinaryGraph h = ordinary_graph_from_json(json::parse(to_json(g).dump()));
    CHECK(h.edges == g.edges);
    CHECK(h.d == 1);
    CHECK_THROWS_AS(ordinary_graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0, 0]]})")), FormatError);
    json d = to_json(gamma_family(1));
    CHECK(d.at("loop_number") == 1);
}
