#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rgra/basis.hpp"
#include "rgra/formal_sum.hpp"
#include "rgra/properad.hpp"
#include "rgra/sparse.hpp"

namespace rgra {

// Basis of the isotypic part of one graded piece under relabelings of
// boundaries and white vertices, weighted by the chosen characters.
//
// Element r of the basis is f_r = P(rep_r), P the averaging projection. A
// basis graph k projects to sign(k) * f_{rep(k)}; graphs whose stabilizer
// acts by the wrong sign project to zero (rep -1, sign 0).
struct OrbitBasis {
    Signature sig;
    Regime regime = Regime::AtLeastThree;
    Character boundaries = Character::Trivial;
    Character whites = Character::Trivial;
    std::vector<std::string> reps;
    struct Slot {
        int rep = -1;
        int sign = 0;
    };
    std::unordered_map<std::string, Slot> slot;

    std::size_t size() const { return reps.size(); }
};

OrbitBasis orbit_basis(const Basis& b, Character boundaries, Character whites);

// Matrix of d on the isotypic parts: column j holds d(f_j) in the f basis.
SparseMatrix assemble(const OrbitBasis& src, const OrbitBasis& tgt);

// Coordinates of P(s).
std::vector<Q> coordinates(const FormalSum& s, const OrbitBasis& b);

// The chain sum_r x_r f_r written out as a formal sum.
FormalSum from_coordinates(const std::vector<Q>& x, const OrbitBasis& b);

}  // namespace rgra
