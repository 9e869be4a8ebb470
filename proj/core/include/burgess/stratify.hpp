#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burgess/charsums.hpp"

namespace burgess {

struct StratifyOptions {
    std::size_t r = 1;
    std::vector<std::int64_t> sides;        // k, non-decreasing
    double c = 1.0;                         // threshold constant C
    double c_ceiling = 1.0;                 // ceiling constant C''
    std::optional<std::uint64_t> samples;   // exhaustive when empty
    std::uint64_t seed = 0;
    Budget budget;
    ExecPolicy policy;
};

struct StratifyLevel {
    std::int64_t j = 0;
    double threshold = 0;       // C q^((n+j-1)/2)
    std::uint64_t count = 0;    // collections with |Sigma_mult| above threshold
    std::uint64_t count_in_variety = 0;
    long double ceiling = 0;    // C'' ||k||^(2r) / B(j; k), ||k|| = k_1 ... k_n
    long double ratio = 0;      // count / ceiling
};

/// |Sigma_mult| / q^(n/2) in power-of-two bins: bin b holds [2^b, 2^(b+1)).
struct HistogramBin {
    int log2_lower = 0;
    std::uint64_t count = 0;
};

struct StratifyReport {
    std::uint64_t q = 0;
    std::size_t n = 0, r = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    std::uint64_t collections = 0;
    std::uint64_t in_variety = 0;           // collections with Xi = 1
    std::vector<StratifyLevel> levels;      // j = 1..n
    std::vector<HistogramBin> histogram;    // ascending bins
    std::uint64_t zero_sums = 0;            // |Sigma_mult| below 1e-9
    double max_abs = 0;
};

/// Tallies, over collections in (0, k]^(2r), how often the complete sum
/// exceeds each level C q^((n+j-1)/2). A sum counts as exceeding when
/// |Sigma| > T + 1e-9 max(1, T). Ceilings use B_{n,r}(j; k) and are reported
/// only when r >= n (zero otherwise).
StratifyReport stratify_audit(const IntPoly& form, const DirichletCharacter& chi, const MonomialSystem& system,
                              const StratifyOptions& options);

}  // namespace burgess
