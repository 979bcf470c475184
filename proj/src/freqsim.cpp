#include "mdcrt/freqsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace mdcrt {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// exp(i 2π num/den) with the integer phase reduced before the one float division
Complex unit_phase(const Int& num, const Int& den) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    double frac = r.get_d() / den.get_d();
    double ang = 2.0 * std::numbers::pi * frac;
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

Int sampling_rate(const IntMatrix& m) {
    Int d = det(m);
    if (d == 0) throw SingularMatrix();
    return abs(d);
}

SampledSignal sample(const SignalSpec& spec, const IntMatrix& m, unsigned long seed) {
    if (!m.square() || m.rows() != spec.dim) throw DimensionMismatch("sample dims");
    Int d = det(m);
    if (d == 0) throw SingularMatrix();

    // f^T M^{-T} n = (adj(M) f) . n / det(M), kept exact until the phase division
    IntMatrix adj = adjugate(m);
    std::vector<IntVector> coeffs;
    coeffs.reserve(spec.tones.size());
    for (const Tone& t : spec.tones) {
        if (t.frequency.size() != spec.dim) throw DimensionMismatch("tone dim");
        coeffs.push_back(adj * t.frequency);
    }

    SampledSignal out;
    out.sampling_matrix = m;
    out.points = fpd(m.transposed()).points();
    out.samples.reserve(out.points.size());

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, spec.noise_sigma);
    for (const IntVector& n : out.points) {
        Complex x = 0;
        for (std::size_t i = 0; i < spec.tones.size(); ++i)
            x += spec.tones[i].amplitude * unit_phase(dot(coeffs[i], n), d);
        if (spec.noise_sigma > 0.0) x += Complex(gauss(rng), gauss(rng));
        out.samples.push_back(x);
    }
    return out;
}

Spectrum mddft(const SampledSignal& s) {
    const IntMatrix& m = s.sampling_matrix;
    Int d = det(m);
    IntMatrix adj = adjugate(m);

    Spectrum out;
    out.sampling_matrix = m;
    out.bins = fpd(m).points();
    out.values.reserve(out.bins.size());
    for (const IntVector& k : out.bins) {
        IntVector ak = adj * k;
        Complex acc = 0;
        for (std::size_t i = 0; i < s.points.size(); ++i)
            acc += s.samples[i] * unit_phase(-dot(ak, s.points[i]), d);
        out.values.push_back(acc);
    }
    return out;
}

std::vector<IntVector> detect_residues(const Spectrum& spec, int rho_max,
                                       double threshold_ratio) {
    if (threshold_ratio <= 0.0 || threshold_ratio > 1.0)
        throw DimensionMismatch("threshold_ratio must be in (0, 1]");
    double best = 0.0;
    for (const Complex& v : spec.values) best = std::max(best, std::abs(v));
    double floor_abs = 1e-9 * Int(abs(det(spec.sampling_matrix))).get_d();
    if (best < floor_abs) throw NoPeaks();

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < spec.values.size(); ++i)
        if (std::abs(spec.values[i]) >= threshold_ratio * best) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(spec.values[a]) > std::abs(spec.values[b]);
    });
    if (static_cast<int>(idx.size()) > rho_max) idx.resize(rho_max);

    std::vector<IntVector> out;
    for (std::size_t i : idx) out.push_back(spec.bins[i]);
    return out;
}

EndToEndResult end_to_end(const SignalSpec& spec, const ModuliSet& ms, unsigned long seed,
                          const EndToEndOptions& opts) {
    ms.validate();
    const int rho = static_cast<int>(spec.tones.size());
    if (rho < 1) throw DimensionMismatch("at least one tone required");

    EndToEndResult res;
    for (std::size_t j = 0; j < ms.gamma(); ++j) {
        SampledSignal sig = sample(spec, ms.moduli[j], seed + j);
        Spectrum sp = mddft(sig);
        res.residue_sets.push_back(detect_residues(sp, rho, opts.threshold_ratio));
    }

    if (opts.prior_pair && rho == 2) {
        IntMatrix r = lcrm(ms.moduli);
        PairSystem ps{ms, res.residue_sets};
        PairSolution sol = reconstruct_pair(ps, r);
        if (!check_condition(ms, sub(sol.first, sol.second)))
            throw DetectionMismatch("recovered pair violates the difference condition");
        res.d_star = sol.d_star;
        res.frequencies = {sol.first, sol.second};
    } else {
        DeterminableRange range = compute_range(ms, rho, opts.lcrm_overrides);
        ResidueSetSystem sys{res.residue_sets, rho};
        ReconstructionOutcome out = reconstruct(ms, sys, range);
        res.frequencies = out.vectors;
        res.outcome = std::move(out);
    }

    // noisy detections can hand the solver a residue system of some other
    // vector set; surface that instead of returning silently wrong tones
    for (std::size_t j = 0; j < ms.gamma(); ++j) {
        std::set<IntVector> regen;
        for (const IntVector& f : res.frequencies)
            regen.insert(vector_remainder(f, ms.moduli[j]).remainder);
        std::set<IntVector> got(res.residue_sets[j].begin(), res.residue_sets[j].end());
        if (regen != got) throw DetectionMismatch("residues of recovered tones disagree");
    }
    return res;
}

}  // namespace mdcrt
