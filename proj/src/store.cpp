#include "rgra/store.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <fcntl.h>
#include <unistd.h>

#include "rgra/complex.hpp"

namespace rgra {

void JobConfig::validate() const {
    if (caps.max_half_edges <= 0 || caps.max_graphs == 0) throw ConfigError("caps must be positive");
    for (auto p : primes) {
        if (p <= (1u << 16)) throw ConfigError("primes must exceed 2^16");
        if (p >= (1u << 31)) throw ConfigError("primes must be below 2^31");
        if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
    }
    if (max_rational == 0) throw ConfigError("max_rational must be positive");
    if (time_budget_seconds < 0) throw ConfigError("time budget must be nonnegative");
}

std::vector<std::uint32_t> JobConfig::effective_primes() const {
    return primes.empty() ? random_primes(seed, 2) : primes;
}

std::filesystem::path JobConfig::effective_cache_root() const {
    if (!cache_root.empty()) return cache_root;
    if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
    return ".rgra-cache";
}

JobConfig config_from_json(const json& j) {
    JobConfig c;
    if (j.contains("caps")) {
        const auto& k = j.at("caps");
        c.caps.max_half_edges = k.value("max_half_edges", c.caps.max_half_edges);
        c.caps.max_graphs = k.value("max_graphs", c.caps.max_graphs);
    }
    if (j.contains("primes")) c.primes = j.at("primes").get<std::vector<std::uint32_t>>();
    c.certify = j.value("certify", c.certify);
    c.seed = j.value("seed", c.seed);
    c.max_rational = j.value("max_rational", c.max_rational);
    c.time_budget_seconds = j.value("time_budget_seconds", c.time_budget_seconds);
    c.cache_root = j.value("cache_root", c.cache_root);
    c.validate();
    return c;
}

json to_json(const JobConfig& c) {
    return {{"caps", {{"max_half_edges", c.caps.max_half_edges}, {"max_graphs", c.caps.max_graphs}}},
            {"primes", c.primes},
            {"certify", c.certify},
            {"seed", c.seed},
            {"max_rational", c.max_rational},
            {"time_budget_seconds", c.time_budget_seconds},
            {"cache_root", c.cache_root}};
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, a = mulmod(a, a))
            if (e & 1) r = mulmod(r, a);
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    // deterministic for n < 3.3e24
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint32_t> random_primes(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(1u << 29, (1u << 30) - 1);
    std::vector<std::uint32_t> out;
    while (static_cast<int>(out.size()) < count) {
        std::uint32_t p = dist(rng) | 1u;
        if (is_prime(p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    return to_hex(std::string(reinterpret_cast<char*>(md), len));
}

const char* kind_name(PayloadKind k) {
    switch (k) {
        case PayloadKind::Basis: return "basis";
        case PayloadKind::Matrix: return "matrix";
        case PayloadKind::Table: return "table";
        case PayloadKind::Certificate: return "certificate";
    }
    return "unknown";
}

Cache::Cache(std::filesystem::path root) : root_(std::move(root)) {
    for (auto k : {PayloadKind::Basis, PayloadKind::Matrix, PayloadKind::Table, PayloadKind::Certificate})
        std::filesystem::create_directories(root_ / kind_name(k));
}

std::string Cache::key_for(PayloadKind kind, const std::string& description) const {
    return sha256_hex(std::string(kind_name(kind)) + '\n' + description + '\n' + kFormatVersion + '\n' + kCodeVersion);
}

std::filesystem::path Cache::path_for(PayloadKind kind, const std::string& key) const {
    return root_ / kind_name(kind) / key;
}

std::optional<std::string> Cache::get(PayloadKind kind, const std::string& description) const {
    const auto path = path_for(kind, key_for(kind, description));
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header) || header.rfind("sha256:", 0) != 0)
        throw CacheCorrupt("cache entry without hash header: " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    std::string payload = os.str();
    if (sha256_hex(payload) != header.substr(7)) throw CacheCorrupt("cache entry hash mismatch: " + path.string());
    return payload;
}

CacheEntry Cache::put(PayloadKind kind, const std::string& description, const std::string& payload) {
    CacheEntry e;
    e.key = key_for(kind, description);
    e.kind = kind;
    e.path = path_for(kind, e.key);
    e.payload_sha256 = sha256_hex(payload);
    if (std::filesystem::exists(e.path)) return e;  // immutable once written
    static std::atomic<unsigned> counter{0};
    const auto tmp = e.path.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << "sha256:" << e.payload_sha256 << '\n' << payload;
        out.flush();
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    }
    std::filesystem::rename(tmp, e.path);
    // one write per manifest line, with O_APPEND, so concurrent writers do
    // not interleave
    const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    json line{{"key", e.key},
              {"kind", kind_name(kind)},
              {"description", description},
              {"path", std::filesystem::relative(e.path, root_).string()},
              {"sha256", e.payload_sha256},
              {"format", kFormatVersion},
              {"code", kCodeVersion},
              {"created", now}};
    const std::string text = line.dump() + '\n';
    int fd = ::open((root_ / "manifest.jsonl").c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) throw std::runtime_error("cannot open cache manifest");
    const ssize_t w = ::write(fd, text.data(), text.size());
    ::close(fd);
    if (w != static_cast<ssize_t>(text.size())) throw std::runtime_error("short write to cache manifest");
    return e;
}

std::vector<json> Cache::manifest() const {
    std::vector<json> out;
    std::ifstream in(root_ / "manifest.jsonl");
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

namespace {

std::string describe(const Signature& s, Regime regime) {
    return s.str() + (regime == Regime::AtLeastThree ? " ge3" : " full");
}

}  // namespace

Basis cached_basis(Cache* cache, const Signature& sig, Regime regime, const Caps& caps) {
    if (!cache) return enumerate(sig, regime, caps);
    const std::string desc = describe(sig, regime);
    if (auto hit = cache->get(PayloadKind::Basis, desc)) return basis_from_json(json::parse(*hit));
    Basis b = enumerate(sig, regime, caps);
    cache->put(PayloadKind::Basis, desc, to_json(b).dump());
    return b;
}

SparseMatrix cached_matrix(Cache* cache, const Basis& src, const Basis& tgt) {
    if (!cache) return assemble(src, tgt);
    const std::string desc = describe(src.sig, src.regime) + " -> " + describe(tgt.sig, tgt.regime);
    if (auto hit = cache->get(PayloadKind::Matrix, desc)) return matrix_from_triplets(*hit);
    SparseMatrix m = assemble(src, tgt);
    cache->put(PayloadKind::Matrix, desc, to_triplets(m));
    return m;
}

}  // namespace rgra
