#pragma once

#include <vector>

#include "mdcrt/multivec.hpp"

namespace mdcrt {

/// gamma two-element residue sets for the two-vector problem.
struct PairSystem {
    ModuliSet ms;
    std::vector<std::vector<IntVector>> sets;  ///< each of size 1 or 2
};

/// The two difference remainders of one residue set.
struct DifferencePair {
    IntVector d1;  ///< rem(v_j1 - v_j2, M_j)
    IntVector d2;  ///< rem(v_j2 - v_j1, M_j)
};

struct PairSolution {
    IntVector d_star;
    IntVector first, second;  ///< ordered by the d* partition
};

/// The shift set of the range condition: the intersection of all N(M_j).
std::vector<IntVector> common_difference_set(const ModuliSet& ms);

/// The range condition on a candidate difference d: d or -d lies in
/// LAT(R) + intersection of the N(M_j), and d avoids every half lattice.
bool check_condition(const ModuliSet& ms, const IntVector& d);

/// rem(f1, M_j) != rem(f2, M_j) for every j.
bool distinct_in_all_sets(const ModuliSet& ms, const IntVector& f1, const IntVector& f2);

/// rem(r1-r2, M_j) != rem(r2-r1, M_j) for every j; equivalently f1-f2 avoids
/// every half lattice.
bool asymmetric_difference(const ModuliSet& ms, const IntVector& f1, const IntVector& f2);

DifferencePair difference_pair(const std::vector<IntVector>& set, const IntMatrix& m);

/// Reconstruct the two vectors: find the common difference d* across all
/// difference pairs (lexicographically smallest when two exist), partition
/// each set by it, and solve the two systems. Results are reduced into N(r).
PairSolution reconstruct_pair(const PairSystem& ps, const IntMatrix& r);

/// One-dimensional corollary: moduli 1 < m_1 < ... < m_gamma, M = lcm.
struct OneDimProblem {
    std::vector<Int> moduli;
    Int M;

    explicit OneDimProblem(std::vector<Int> ms);
};

/// Admissible differences {1..m_1-1} U {M-m_1+1..M-1} minus all integer
/// half-multiples k*m_j/2.
std::vector<Int> onedim_condition_set(const OneDimProblem& p);

struct OneDimPriorSets {
    std::vector<Int> prop4;  ///< {1 .. ceil(m1/2)-1}
    std::vector<Int> prop5;  ///< {1 .. m1-1} when all moduli odd and gamma >= 2
    std::vector<Int> prop6;  ///< {1 .. m1-1} when m_1..m_{gamma-1} odd and m_gamma > 2 m_1
};

OneDimPriorSets onedim_prior_sets(const OneDimProblem& p);

}  // namespace mdcrt
