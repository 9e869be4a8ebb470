#pragma once

#include <cstdint>
#include <vector>

#include "burgess/charsums.hpp"

namespace burgess::cli {

/// An explicitly supplied (g, K) pair evaluated alongside the random samples.
struct TProbe {
    RealPoly phase;
    std::vector<std::int64_t> sides;
};

struct TSample {
    double magnitude = 0;
    std::vector<double> coefficients;   // theta_beta for beta in {0} u Lambda(G)
    std::vector<std::int64_t> sides;
};

struct TEstimate {
    double estimate = 0;             // max over samples and probes
    double zero_phase_value = 0;     // |S(F, 0; N, H)|, a certified lower bound for T
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t best_sample = 0;     // index into the sample sequence
    TSample best;
    std::vector<double> probe_values;
    std::vector<double> running_max; // estimate after each sample
};

/// Approximates T(F, G; N, H) = sup over g in span{1, x^beta} with
/// coefficients in [0,1) and sub-boxes K <= H of |S(F, g; N, K)| from below.
/// Sample 0 is g = 0, K = H; later samples draw coefficients and K_i
/// uniformly from the seeded generator, so the estimate is non-decreasing in
/// the sample count for a fixed seed.
TEstimate sample_t(const IntPoly& form, const DirichletCharacter& chi, const MonomialSystem& system,
                   const BoxRegion& box, std::uint64_t samples, std::uint64_t seed, const std::vector<TProbe>& probes,
                   const Budget& budget = {}, const ExecPolicy& policy = {});

}  // namespace burgess::cli
