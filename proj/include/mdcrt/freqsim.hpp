#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mdcrt/multivec.hpp"
#include "mdcrt/pairvec.hpp"

namespace mdcrt {

using Complex = std::complex<double>;

struct Tone {
    Complex amplitude;
    IntVector frequency;
};

struct SignalSpec {
    std::size_t dim = 0;
    std::vector<Tone> tones;
    double noise_sigma = 0.0;  ///< per-component std dev of additive complex Gaussian
};

/// One undersampled snapshot: x[n] over n in N(M^T).
struct SampledSignal {
    IntMatrix sampling_matrix;
    std::vector<IntVector> points;  ///< N(M^T) in emission order
    std::vector<Complex> samples;
};

/// The multidimensional DFT of a sampled signal: X(k) over k in N(M).
struct Spectrum {
    IntMatrix sampling_matrix;
    std::vector<IntVector> bins;  ///< N(M) in emission order
    std::vector<Complex> values;
};

Int sampling_rate(const IntMatrix& m);  ///< |det(M)|, samples per unit volume

SampledSignal sample(const SignalSpec& spec, const IntMatrix& m, unsigned long seed);

Spectrum mddft(const SampledSignal& s);

/// Bins whose magnitude reaches threshold_ratio of the peak, largest first,
/// at most rho_max of them. Throws NoPeaks when everything sits below the
/// absolute floor 1e-9 * |det|.
std::vector<IntVector> detect_residues(const Spectrum& spec, int rho_max,
                                       double threshold_ratio);

struct EndToEndOptions {
    double threshold_ratio = 0.5;
    bool prior_pair = false;  ///< route rho=2 through the common-difference solver
    std::map<SubsetKey, IntMatrix> lcrm_overrides;
};

struct EndToEndResult {
    std::vector<IntVector> frequencies;
    std::vector<std::vector<IntVector>> residue_sets;
    std::optional<IntVector> d_star;  ///< present on the prior-information path
    std::optional<ReconstructionOutcome> outcome;
};

/// sample -> mddft -> detect_residues per modulus, then reconstruct.
EndToEndResult end_to_end(const SignalSpec& spec, const ModuliSet& ms, unsigned long seed,
                          const EndToEndOptions& opts = {});

}  // namespace mdcrt
