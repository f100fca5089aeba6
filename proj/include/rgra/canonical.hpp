#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgra/ribbon_graph.hpp"

namespace rgra {

inline constexpr std::uint8_t kEncodingVersion = 1;

// Canonical representative of an oriented ribbon graph: the input equals
// sign * decode(key) in the graph complex. `zero` is set when some
// automorphism reverses the orientation; sign is then 0.
struct CanonicalForm {
    std::string key;
    int sign = 1;
    bool zero = false;
};

CanonicalForm canonicalize(const RibbonGraph& g);

// Graph in normal form: tau(h) = h^1, orientation following numbering.
RibbonGraph decode(const std::string& key);

Signature key_signature(const std::string& key);
int key_num_edges(const std::string& key);

// Sign relating the orientation of g to the orientation induced by the
// numbering `pos` (old half-edge -> new position, with tau pairs landing on
// {2k, 2k+1}).
int relabeling_sign(const RibbonGraph& g, const std::vector<int>& pos);

// Renumbers g so that tau(h) = h^1 and orientation follows numbering,
// returning the sign picked up.
int normalize(RibbonGraph& g);

int permutation_parity(const std::vector<int>& seq);

}  // namespace rgra
