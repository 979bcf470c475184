#include "mdcrt/multivec.hpp"

#include <algorithm>
#include <utility>

namespace mdcrt {

void ModuliSet::validate() const {
    if (moduli.empty()) throw DimensionMismatch("empty moduli set");
    const std::size_t d = moduli.front().rows();
    for (const IntMatrix& m : moduli) {
        if (!m.square() || m.rows() != d) throw DimensionMismatch("moduli dims differ");
        if (det(m) == 0) throw SingularMatrix();
    }
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<SubsetKey> subsets_of_size(int n, int k) {
    std::vector<SubsetKey> out;
    if (k < 0 || k > n) return out;
    SubsetKey cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

DeterminableRange compute_range(const ModuliSet& ms, int rho,
                                const std::map<SubsetKey, IntMatrix>& lcrm_overrides) {
    ms.validate();
    const int gamma = static_cast<int>(ms.gamma());
    if (rho < 1 || gamma < rho) throw DimensionMismatch("need gamma >= rho >= 1");

    DeterminableRange range;
    range.eta = gamma / rho;
    range.alpha = gamma - range.eta * rho;

    bool first = true;
    std::set<IntVector> acc;
    for (const SubsetKey& key : subsets_of_size(gamma, range.eta)) {
        std::vector<IntMatrix> sub;
        for (int j : key) sub.push_back(ms.moduli[j]);
        IntMatrix canonical = lcrm(sub);
        IntMatrix chosen = canonical;
        auto it = lcrm_overrides.find(key);
        if (it != lcrm_overrides.end()) {
            if (!it->second.square() || it->second.rows() != ms.dim() || det(it->second) == 0)
                throw InvalidOverride("override is not a non-singular matrix of matching dim");
            if (!(hnf(it->second).hnf == canonical))
                throw InvalidOverride("override does not span the lcrm lattice of its subset");
            chosen = it->second;
        }
        std::set<IntVector> pts;
        for (const IntVector& p : fpd(chosen).points()) pts.insert(p);
        if (first) {
            acc = std::move(pts);
            first = false;
        } else {
            std::set<IntVector> kept;
            for (const IntVector& p : acc)
                if (pts.count(p)) kept.insert(p);
            acc = std::move(kept);
        }
        range.subset_lcrms.emplace(key, std::move(chosen));
    }
    range.points.assign(acc.begin(), acc.end());
    range.point_set = std::move(acc);
    return range;
}

bool check_theorem1(const ModuliSet& ms, const DeterminableRange& range,
                    const std::vector<IntVector>& vectors) {
    for (const IntMatrix& m : ms.moduli) {
        bool all = true;
        for (const IntVector& v : vectors)
            if (vector_remainder(v, m).remainder != v) {
                all = false;
                break;
            }
        if (all) return true;
    }
    for (const IntVector& v : vectors)
        if (!range.contains(v)) return false;
    return true;
}

bool candidate_valid(const IntVector& f, const DeterminableRange& range,
                     const ResidueSetSystem& system, const ModuliSet& ms) {
    if (!range.contains(f)) return false;
    for (std::size_t j = 0; j < ms.gamma(); ++j) {
        IntVector r = vector_remainder(f, ms.moduli[j]).remainder;
        const auto& sj = system.sets[j];
        if (std::find(sj.begin(), sj.end(), r) == sj.end()) return false;
    }
    return true;
}

namespace {

struct SolverState {
    std::vector<std::vector<IntVector>> sets;
    CorrectionState corr;
    std::vector<IntVector> found;
    std::vector<AuditEvent> audit;
    long invocations = 0;
};

bool vec_in(const std::vector<IntVector>& xs, const IntVector& v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

class Reconstructor {
public:
    Reconstructor(const ModuliSet& ms, const ResidueSetSystem& system,
                  const DeterminableRange& range)
        : ms_(ms), system_(system), range_(range),
          gamma_(static_cast<int>(ms.gamma())),
          full_lattice_(Lattice::of(lcrm(ms.moduli))) {}

    ReconstructionOutcome run() {
        validate_input();
        SolverState st;
        st.sets = system_.sets;
        st.corr.anchored.resize(gamma_);
        st.corr.removed_history.resize(gamma_);

        if (system_.rho >= 2) {
            std::optional<ReconstructionOutcome> direct = condition1_fast_path(st);
            if (direct) return *direct;
        }

        std::optional<SolverState> done = solve_from(st);
        if (!done) throw ReconstructionFailed();
        audit_result(done->found);
        return {std::move(done->found), std::move(done->audit), done->invocations};
    }

private:
    const ModuliSet& ms_;
    const ResidueSetSystem& system_;
    const DeterminableRange& range_;
    int gamma_;
    Lattice full_lattice_;

    void validate_input() {
        if (static_cast<int>(system_.sets.size()) != gamma_)
            throw DimensionMismatch("one residue set per modulus required");
        for (int j = 0; j < gamma_; ++j) {
            const auto& sj = system_.sets[j];
            if (sj.empty() || static_cast<int>(sj.size()) > system_.rho)
                throw InconsistentSystem("set " + std::to_string(j + 1) +
                                         " cardinality outside [1, rho]");
            for (const IntVector& r : sj)
                if (vector_remainder(r, ms_.moduli[j]).remainder != r)
                    throw InconsistentSystem("residue outside N(M_" + std::to_string(j + 1) + ")");
        }
    }

    IntVector remainder_of(const IntVector& f, int j) const {
        return vector_remainder(f, ms_.moduli[j]).remainder;
    }

    // Theorem-1 condition 1: some full-cardinality set whose every element
    // validates as a whole candidate is the answer itself.
    std::optional<ReconstructionOutcome> condition1_fast_path(const SolverState& st) {
        for (int j = 0; j < gamma_; ++j) {
            if (static_cast<int>(st.sets[j].size()) != system_.rho) continue;
            bool all = true;
            for (const IntVector& r : st.sets[j]) {
                for (int k = 0; k < gamma_ && all; ++k)
                    if (!vec_in(st.sets[k], remainder_of(r, k))) all = false;
                if (!all) break;
            }
            if (!all) continue;
            ReconstructionOutcome out;
            out.vectors = st.sets[j];
            AuditEvent ev;
            ev.kind = AuditEvent::Kind::DirectSet;
            ev.set_index = j + 1;
            out.rounds.push_back(std::move(ev));
            audit_result(out.vectors);
            return out;
        }
        return std::nullopt;
    }

    // One round: determine a single vector or report exhaustion.
    bool run_round(SolverState& st) {
        const int rho_rem = system_.rho - static_cast<int>(st.found.size());
        std::vector<IntVector> tuple;
        tuple.reserve(gamma_);
        for (int j = 0; j < gamma_; ++j) tuple.push_back(st.sets[j].front());
        {
            AuditEvent ev;
            ev.kind = AuditEvent::Kind::TupleChosen;
            ev.tuple = tuple;
            st.audit.push_back(std::move(ev));
        }

        if (rho_rem == 1) return final_round(st, tuple);

        for (const SubsetKey& key : subsets_of_size(gamma_, range_.eta)) {
            std::vector<Congruence> sys;
            for (int j : key) sys.push_back({ms_.moduli[j], tuple[j]});
            AuditEvent ev;
            ev.kind = AuditEvent::Kind::Candidate;
            for (int j : key) ev.subset.push_back(j + 1);
            ++st.invocations;
            try {
                CrtSolution sol = solve(sys);
                // reduce into the FPD of the subset's chosen lcrm; N_eta lives there
                ev.candidate =
                    vector_remainder(sol.value, range_.subset_lcrms.at(key)).remainder;
            } catch (const NoSolution&) {
                ev.outcome = "no-solution";
                st.audit.push_back(std::move(ev));
                continue;
            }
            std::string why;
            if (valid_against(st, ev.candidate, &why)) {
                ev.outcome = "accepted";
                IntVector f = ev.candidate;
                st.audit.push_back(std::move(ev));
                accept(st, f);
                return true;
            }
            ev.outcome = why;
            st.audit.push_back(std::move(ev));
        }
        return false;
    }

    // Last remaining vector: solve the whole system at once. The solution is
    // reduced modulo the canonical full lcrm, which need not contain N_eta,
    // so on a range miss the unique congruent N_eta point is looked up.
    bool final_round(SolverState& st, const std::vector<IntVector>& tuple) {
        std::vector<Congruence> sys;
        for (int j = 0; j < gamma_; ++j) sys.push_back({ms_.moduli[j], tuple[j]});
        AuditEvent ev;
        ev.kind = AuditEvent::Kind::Candidate;
        ++st.invocations;
        try {
            CrtSolution sol = solve(sys);
            ev.candidate = sol.value;
        } catch (const NoSolution&) {
            ev.outcome = "no-solution";
            st.audit.push_back(std::move(ev));
            return false;
        }
        if (range_.contains(ev.candidate)) {
            ev.outcome = "accepted";
            IntVector f = ev.candidate;
            st.audit.push_back(std::move(ev));
            accept(st, f);
            return true;
        }
        for (const IntVector& p : range_.points) {
            if (!full_lattice_.contains(sub(p, ev.candidate))) continue;
            ev.range_point = p;
            ev.outcome = "accepted";
            st.audit.push_back(std::move(ev));
            accept(st, p);
            return true;
        }
        ev.outcome = "outside-range";
        st.audit.push_back(std::move(ev));
        return false;
    }

    bool valid_against(const SolverState& st, const IntVector& f, std::string* why) {
        if (!range_.contains(f)) {
            *why = "outside-range";
            return false;
        }
        for (int j = 0; j < gamma_; ++j)
            if (!vec_in(st.sets[j], remainder_of(f, j))) {
                *why = "not-in-set-" + std::to_string(j + 1);
                return false;
            }
        return true;
    }

    // Removal rule: drop the accepted vector's remainder from every set that
    // still holds one residue per remaining vector; sets already short keep
    // it and anchor it instead.
    void accept(SolverState& st, const IntVector& f) {
        const int rho_rem = system_.rho - static_cast<int>(st.found.size());
        for (int j = 0; j < gamma_; ++j) {
            IntVector r = remainder_of(f, j);
            auto& sj = st.sets[j];
            if (static_cast<int>(sj.size()) == rho_rem) {
                sj.erase(std::find(sj.begin(), sj.end(), r));
                st.corr.removed_history[j].push_back(r);
            } else if (!vec_in(st.corr.anchored[j], r)) {
                st.corr.anchored[j].push_back(r);
            }
        }
        st.found.push_back(f);
        ++st.corr.successful_rounds;
    }

    // Depth-first search over correction choices; each failed round branches
    // on single sets, then pairs, then triples of sets with S_j ∩ A_j != {}.
    std::optional<SolverState> solve_from(SolverState st) {
        while (static_cast<int>(st.found.size()) < system_.rho) {
            if (run_round(st)) continue;
            st.audit.push_back({AuditEvent::Kind::RoundFailed});
            return correct_and_retry(st);
        }
        return st;
    }

    std::optional<SolverState> correct_and_retry(const SolverState& st) {
        std::vector<int> candidates;
        for (int j = 0; j < gamma_; ++j) {
            bool any = false;
            for (const IntVector& x : st.sets[j])
                if (vec_in(st.corr.anchored[j], x)) any = true;
            if (any) candidates.push_back(j);
        }
        const int max_tier = std::min<int>(3, static_cast<int>(candidates.size()));
        for (int tier = 1; tier <= max_tier; ++tier) {
            for (const SubsetKey& combo :
                 subsets_of_size(static_cast<int>(candidates.size()), tier)) {
                std::vector<int> sets_chosen;
                for (int idx : combo) sets_chosen.push_back(candidates[idx]);
                std::optional<SolverState> res = try_corrections(st, sets_chosen, 0, st);
                if (res) return res;
            }
        }
        return std::nullopt;
    }

    // Apply one (remove, re-add) choice per chosen set, then recurse.
    std::optional<SolverState> try_corrections(const SolverState& base,
                                               const std::vector<int>& sets_chosen,
                                               std::size_t pos, SolverState current) {
        if (pos == sets_chosen.size()) return solve_from(std::move(current));
        const int j = sets_chosen[pos];
        for (const IntVector& x : base.sets[j]) {
            if (!vec_in(base.corr.anchored[j], x)) continue;
            for (const IntVector& y : base.corr.removed_history[j]) {
                if (vec_in(base.sets[j], y)) continue;
                SolverState next = current;
                auto& sj = next.sets[j];
                auto it = std::find(sj.begin(), sj.end(), x);
                *it = y;  // replace in place to keep enumeration order stable
                auto& aj = next.corr.anchored[j];
                aj.erase(std::find(aj.begin(), aj.end(), x));
                AuditEvent ev;
                ev.kind = AuditEvent::Kind::Correction;
                ev.set_index = j + 1;
                ev.removed = x;
                ev.added = y;
                next.audit.push_back(std::move(ev));
                std::optional<SolverState> res =
                    try_corrections(base, sets_chosen, pos + 1, std::move(next));
                if (res) return res;
            }
        }
        return std::nullopt;
    }

    // Regenerated residue sets must match the input system exactly.
    void audit_result(const std::vector<IntVector>& vectors) const {
        for (int j = 0; j < gamma_; ++j) {
            std::set<IntVector> regen;
            for (const IntVector& f : vectors)
                regen.insert(vector_remainder(f, ms_.moduli[j]).remainder);
            std::set<IntVector> given(system_.sets[j].begin(), system_.sets[j].end());
            if (regen != given)
                throw InconsistentSystem("regenerated residues differ from input in set " +
                                         std::to_string(j + 1));
        }
    }
};

}  // namespace

ReconstructionOutcome reconstruct(const ModuliSet& ms, const ResidueSetSystem& system,
                                  const DeterminableRange& range) {
    ms.validate();
    if (system.rho < 1) throw DimensionMismatch("rho must be >= 1");
    return Reconstructor(ms, system, range).run();
}

Int crt_invocation_bound(int gamma, int rho) {
    if (rho < 1 || gamma < rho) throw DimensionMismatch("need gamma >= rho >= 1");
    const int eta = gamma / rho;
    Int total = 0;
    for (int l = 1; l <= rho; ++l) {
        const int k = rho - l + 1;
        const int eta_l = gamma / k;
        const int alpha_l = gamma - eta_l * k;
        total += binomial(gamma, eta) - alpha_l * binomial(eta_l + 1, eta) -
                 (k - alpha_l) * binomial(eta_l, eta) + 1;
    }
    return total;
}

}  // namespace mdcrt
