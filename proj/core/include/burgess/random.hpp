#pragma once

#include <cstdint>
#include <random>

namespace burgess {

/// Seeded generator used for every sampled experiment: std::mt19937_64 with
/// distributions implemented here (the standard library's distributions are
/// implementation-defined, which would break cross-platform reproducibility).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi] by rejection sampling.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace burgess
