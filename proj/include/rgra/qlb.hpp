#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgra/formal_sum.hpp"

namespace rgra {

// Boundary relabeling by a 1-based map old -> new.
FormalSum permute_boundaries(const FormalSum& s, const std::vector<int>& perm);

// Sum of s over the cyclic relabelings of boundaries 1, 2, 3 (others fixed).
FormalSum cyclic_sum_123(const FormalSum& s);

// The relation elements of the quasi-Lie bialgebra pushed through the
// generator representatives, with the external labels of the pictures:
//   drinfeld: cobracket on bracket minus the four bracket-on-cobracket terms;
//   cojacobi: cyclic sum of cobracket on cobracket plus trio into bracket;
//   trio_cobracket: cyclic sum of (trio into cobracket) minus its relabeling
//     1 -> 4, 2 -> 1, 3 -> 2, 4 -> 3.
FormalSum drinfeld_element();
FormalSum cojacobi_element();
FormalSum trio_cobracket_element();
// The same combination written as (Id - z + z^2 - z^3 - (23) - (24)) applied
// to the trio-into-cobracket composite, z = (1234).
FormalSum trio_cobracket_s4_element();

// Explicit primitives: d(primitive) should equal the element. The trio one
// is summed with the same cyclic operator as its element.
FormalSum cojacobi_primitive();
FormalSum trio_cobracket_primitive();

// Composites drawn explicitly as graphs, used to cross-check compose.
// Cobracket on bracket: the four two-white chains.
FormalSum drinfeld_top_display();
// Trio into bracket, cyclically summed, written with trio graphs carrying a
// white leg.
FormalSum cojacobi_trio_display();
// Trio into cobracket.
FormalSum trio_cobracket_display();

struct RelationResult {
    std::string id;
    bool passed = false;
    std::string criterion;  // what was required
    FormalSum element;      // the relation pushed forward
    FormalSum residual;     // what is left over (empty on success)
    bool exact = false;     // element is a coboundary
    bool primitive_valid = false;
    std::optional<std::vector<Q>> witness;  // solve result, in basis coordinates
    std::string note;
};

struct RelationReport {
    std::vector<RelationResult> relations;
    bool all_passed() const;
};

RelationReport verify_qlb();

}  // namespace rgra
