#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgra/basis.hpp"
#include "rgra/io.hpp"

namespace rgra {

inline constexpr const char* kFormatVersion = "1";
inline constexpr const char* kCodeVersion = "rgra-1.0";
inline constexpr const char* kCacheEnv = "RGRA_CACHE_DIR";

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct JobConfig {
    Caps caps;
    std::vector<std::uint32_t> primes;  // empty: drawn from the seed
    bool certify = false;
    std::uint64_t seed = 20240601;
    std::size_t max_rational = 20000;
    double time_budget_seconds = 0;  // 0: none
    std::string cache_root;          // empty: environment, then default

    // Throws ConfigError unless caps are positive and primes exceed 2^16.
    void validate() const;
    // The primes to use: the configured ones, or two 30-bit primes drawn
    // from the seed.
    std::vector<std::uint32_t> effective_primes() const;
    std::filesystem::path effective_cache_root() const;
};

JobConfig config_from_json(const json& j);
json to_json(const JobConfig& c);

bool is_prime(std::uint64_t n);
// Distinct primes in [2^29, 2^30) drawn with a seeded generator.
std::vector<std::uint32_t> random_primes(std::uint64_t seed, int count);

std::string sha256_hex(const std::string& data);

enum class PayloadKind { Basis, Matrix, Table, Certificate };
const char* kind_name(PayloadKind k);

struct CacheEntry {
    std::string key;
    PayloadKind kind = PayloadKind::Basis;
    std::filesystem::path path;
    std::string payload_sha256;
};

struct CacheCorrupt : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Content-addressed store: one directory per payload kind, files named by
// the hash of (kind, description, format version, code version). Entries
// are written to a temporary file and renamed into place; a manifest line is
// appended per new entry. Every file starts with the hash of its payload,
// checked on read.
class Cache {
public:
    explicit Cache(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }
    std::string key_for(PayloadKind kind, const std::string& description) const;

    std::optional<std::string> get(PayloadKind kind, const std::string& description) const;
    CacheEntry put(PayloadKind kind, const std::string& description, const std::string& payload);

    std::vector<json> manifest() const;

private:
    std::filesystem::path path_for(PayloadKind kind, const std::string& key) const;
    std::filesystem::path root_;
};

// Basis and matrix through the cache.
Basis cached_basis(Cache* cache, const Signature& sig, Regime regime, const Caps& caps);
SparseMatrix cached_matrix(Cache* cache, const Basis& src, const Basis& tgt);

}  // namespace rgra
