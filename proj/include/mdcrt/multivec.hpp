#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mdcrt/crt.hpp"

namespace mdcrt {

/// The gamma sampling matrices M_1..M_gamma.
struct ModuliSet {
    std::vector<IntMatrix> moduli;

    std::size_t gamma() const noexcept { return moduli.size(); }
    std::size_t dim() const { return moduli.empty() ? 0 : moduli.front().rows(); }
    void validate() const;  ///< non-singular, square, equal dims
};

/// gamma unordered residue sets; element order is the caller's and fixes the
/// deterministic enumeration order of the reconstruction.
struct ResidueSetSystem {
    std::vector<std::vector<IntVector>> sets;
    int rho = 0;
};

using SubsetKey = std::vector<int>;  ///< 0-based sorted set indices

/// N_eta of Eq-style range construction: eta, alpha with gamma = eta*rho +
/// alpha, one lcrm per size-eta subset, and the intersection of their FPDs.
struct DeterminableRange {
    int eta = 0;
    int alpha = 0;
    std::map<SubsetKey, IntMatrix> subset_lcrms;
    std::vector<IntVector> points;  ///< sorted lexicographically

    bool contains(const IntVector& v) const { return point_set.count(v) != 0; }
    std::set<IntVector> point_set;
};

/// Per-set bookkeeping of the correction machinery: anchored residues A_j
/// (remainders of determined vectors that could not be removed) and the
/// removal history B(j) across successful rounds.
struct CorrectionState {
    std::vector<std::vector<IntVector>> anchored;
    std::vector<std::vector<IntVector>> removed_history;
    int successful_rounds = 0;
};

struct AuditEvent {
    enum class Kind { TupleChosen, Candidate, Correction, DirectSet, RoundFailed };
    Kind kind;

    std::vector<IntVector> tuple;  // TupleChosen

    std::vector<int> subset;  // Candidate: 1-based set indices; empty = full system
    IntVector candidate;      // solve value (in the subset lcrm's FPD)
    IntVector range_point;    // N_eta point congruent to a full solve, when it differs
    std::string outcome;      // "accepted", "outside-range", "not-in-set-<j>", "no-solution"

    int set_index = 0;  // Correction / DirectSet: 1-based
    IntVector removed, added;
};

struct ReconstructionOutcome {
    std::vector<IntVector> vectors;  ///< in acceptance order
    std::vector<AuditEvent> rounds;
    long crt_invocations = 0;
};

/// Build the determinable range N_eta. Overrides replace the canonical lcrm
/// of their subset and must span the same lattice (InvalidOverride otherwise).
DeterminableRange compute_range(const ModuliSet& ms, int rho,
                                const std::map<SubsetKey, IntMatrix>& lcrm_overrides = {});

/// Theorem-1 test: vectors all inside some N(M_j), or all inside N_eta.
bool check_theorem1(const ModuliSet& ms, const DeterminableRange& range,
                    const std::vector<IntVector>& vectors);

/// Lemma-1 test for one candidate against the full residue-set system.
bool candidate_valid(const IntVector& f, const DeterminableRange& range,
                     const ResidueSetSystem& system, const ModuliSet& ms);

/// Reconstruct the rho vectors from their residue-set system, with the
/// round/removal/correction machinery and a full audit trail.
ReconstructionOutcome reconstruct(const ModuliSet& ms, const ResidueSetSystem& system,
                                  const DeterminableRange& range);

/// Worst-case number of MD-CRT invocations over all rho rounds when no
/// residue set is deficient.
Int crt_invocation_bound(int gamma, int rho);

Int binomial(int n, int k);

/// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<SubsetKey> subsets_of_size(int n, int k);

}  // namespace mdcrt
