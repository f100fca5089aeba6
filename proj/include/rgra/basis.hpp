#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rgra/ribbon_graph.hpp"

namespace rgra {

struct Caps {
    int max_half_edges = 48;
    std::size_t max_graphs = 4'000'000;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered basis of one graded piece: canonical keys sorted by encoding,
// graphs with orientation-reversing automorphisms removed.
struct Basis {
    Signature sig;
    Regime regime = Regime::AtLeastThree;
    std::vector<std::string> keys;
    std::unordered_map<std::string, int> index;

    std::size_t size() const { return keys.size(); }
    int find(const std::string& key) const {
        auto it = index.find(key);
        return it == index.end() ? -1 : it->second;
    }
};

Basis enumerate(const Signature& sig, Regime regime = Regime::AtLeastThree, const Caps& caps = {});

// Largest edge count of a graph in the valence >= 3 regime.
int max_edges_at_least_three(int m, int n, int g);
// Fewest edges a graph with these parameters can have.
int min_edges(int m, int n, int g);

// Brute-force enumeration over all rotation systems, for cross-checking.
Basis enumerate_brute_force(const Signature& sig, Regime regime);

void clear_basis_cache();

}  // namespace rgra
