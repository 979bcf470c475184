#include "mdcrt/pairvec.hpp"

#include <algorithm>
#include <set>

namespace mdcrt {

std::vector<IntVector> common_difference_set(const ModuliSet& ms) {
    ms.validate();
    std::vector<IntVector> out;
    std::vector<Fpd> others;
    for (std::size_t j = 1; j < ms.gamma(); ++j) others.emplace_back(ms.moduli[j]);
    for (const IntVector& p : fpd(ms.moduli.front()).points()) {
        bool all = true;
        for (const Fpd& f : others)
            if (!f.contains(p)) {
                all = false;
                break;
            }
        if (all) out.push_back(p);
    }
    return out;
}

bool check_condition(const ModuliSet& ms, const IntVector& d) {
    ms.validate();
    for (const IntMatrix& m : ms.moduli)
        if (in_half_lattice(d, m)) return false;  // symmetric set, one check suffices
    Lattice full = Lattice::of(lcrm(ms.moduli));
    std::vector<IntVector> shifts = common_difference_set(ms);
    return in_shifted_lattice_sum(d, full, shifts) ||
           in_shifted_lattice_sum(neg(d), full, shifts);
}

bool distinct_in_all_sets(const ModuliSet& ms, const IntVector& f1, const IntVector& f2) {
    for (const IntMatrix& m : ms.moduli)
        if (vector_remainder(f1, m).remainder == vector_remainder(f2, m).remainder)
            return false;
    return true;
}

bool asymmetric_difference(const ModuliSet& ms, const IntVector& f1, const IntVector& f2) {
    IntVector d = sub(f1, f2);
    for (const IntMatrix& m : ms.moduli) {
        IntVector r1 = vector_remainder(d, m).remainder;
        IntVector r2 = vector_remainder(neg(d), m).remainder;
        if (r1 == r2) return false;
    }
    return true;
}

DifferencePair difference_pair(const std::vector<IntVector>& set, const IntMatrix& m) {
    if (set.size() != 2) throw NoCommonDifference("residue set does not hold two elements");
    return {vector_remainder(sub(set[0], set[1]), m).remainder,
            vector_remainder(sub(set[1], set[0]), m).remainder};
}

PairSolution reconstruct_pair(const PairSystem& ps, const IntMatrix& r) {
    ps.ms.validate();
    const std::size_t gamma = ps.ms.gamma();
    if (ps.sets.size() != gamma) throw DimensionMismatch("one residue set per modulus");

    std::vector<DifferencePair> ds;
    ds.reserve(gamma);
    for (std::size_t j = 0; j < gamma; ++j) {
        if (ps.sets[j].size() < 2 || ps.sets[j][0] == ps.sets[j][1])
            throw NoCommonDifference("set " + std::to_string(j + 1) +
                                     " holds fewer than two distinct residues");
        ds.push_back(difference_pair(ps.sets[j], ps.ms.moduli[j]));
    }

    std::set<IntVector> candidates{ds[0].d1, ds[0].d2};
    for (std::size_t j = 1; j < gamma; ++j) {
        std::set<IntVector> next;
        if (candidates.count(ds[j].d1)) next.insert(ds[j].d1);
        if (candidates.count(ds[j].d2)) next.insert(ds[j].d2);
        candidates = std::move(next);
    }
    if (candidates.empty()) throw NoCommonDifference();
    IntVector d_star = *candidates.begin();  // lexicographically smallest

    std::vector<Congruence> sys1, sys2;
    for (std::size_t j = 0; j < gamma; ++j) {
        const auto& vj = ps.sets[j];
        if (ds[j].d1 == d_star) {
            sys1.push_back({ps.ms.moduli[j], vj[0]});
            sys2.push_back({ps.ms.moduli[j], vj[1]});
        } else {
            sys1.push_back({ps.ms.moduli[j], vj[1]});
            sys2.push_back({ps.ms.moduli[j], vj[0]});
        }
    }
    IntVector f1 = vector_remainder(solve(sys1).value, r).remainder;
    IntVector f2 = vector_remainder(solve(sys2).value, r).remainder;
    return {std::move(d_star), std::move(f1), std::move(f2)};
}

OneDimProblem::OneDimProblem(std::vector<Int> ms) : moduli(std::move(ms)) {
    if (moduli.empty() || moduli.front() <= 1)
        throw DimensionMismatch("one-dim moduli must start above 1");
    for (std::size_t i = 1; i < moduli.size(); ++i)
        if (moduli[i] <= moduli[i - 1])
            throw DimensionMismatch("one-dim moduli must be strictly increasing");
    M = 1;
    for (const Int& m : moduli) {
        Int g;
        mpz_lcm(g.get_mpz_t(), M.get_mpz_t(), m.get_mpz_t());
        M = g;
    }
}

std::vector<Int> onedim_condition_set(const OneDimProblem& p) {
    auto excluded = [&](const Int& x) {
        for (const Int& m : p.moduli) {
            // k*m/2 is an integer multiple of m/2 for even m, of m for odd m
            Int step = (m % 2 == 0) ? Int(m / 2) : m;
            if (mpz_divisible_p(x.get_mpz_t(), step.get_mpz_t())) return true;
        }
        return false;
    };
    std::vector<Int> out;
    for (Int x = 1; x < p.moduli.front(); ++x)
        if (!excluded(x)) out.push_back(x);
    for (Int x = p.M - p.moduli.front() + 1; x < p.M; ++x)
        if (x >= 1 && !excluded(x)) out.push_back(x);
    return out;
}

OneDimPriorSets onedim_prior_sets(const OneDimProblem& p) {
    OneDimPriorSets out;
    Int half_ceil = (p.moduli.front() + 1) / 2;
    for (Int x = 1; x < half_ceil; ++x) out.prop4.push_back(x);

    bool all_odd = true;
    for (const Int& m : p.moduli)
        if (m % 2 == 0) all_odd = false;
    if (all_odd && p.moduli.size() >= 2)
        for (Int x = 1; x < p.moduli.front(); ++x) out.prop5.push_back(x);

    bool head_odd = true;
    for (std::size_t i = 0; i + 1 < p.moduli.size(); ++i)
        if (p.moduli[i] % 2 == 0) head_odd = false;
    if (p.moduli.size() >= 2 && head_odd && p.moduli.back() > 2 * p.moduli.front())
        for (Int x = 1; x < p.moduli.front(); ++x) out.prop6.push_back(x);
    return out;
}

}  // namespace mdcrt
