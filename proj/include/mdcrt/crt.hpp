#pragma once

#include <vector>

#include "mdcrt/lattice.hpp"

namespace mdcrt {

/// One line of a congruence system: f ≡ residue (mod LAT(modulus)).
struct Congruence {
    IntMatrix modulus;
    IntVector residue;  ///< in N(modulus)
};

struct CrtSolution {
    IntVector value;            ///< the unique solution in N(combined_modulus)
    IntMatrix combined_modulus;  ///< canonical lcrm of all input moduli
};

/// Merge two congruences into one modulo their lcrm. Finds an integer
/// solution of a.modulus * n1 - b.modulus * n2 = b.residue - a.residue via
/// the Smith form of [A | -B]; throws NoSolution when the residues are
/// inconsistent.
Congruence merge_pair(const Congruence& a, const Congruence& b);

/// Left fold of merge_pair over a non-empty system.
CrtSolution solve(const std::vector<Congruence>& system);

}  // namespace mdcrt
