#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burgess/exec.hpp"
#include "burgess/rational.hpp"
#include "burgess/systems.hpp"

namespace burgess {

/// sum_{j<=r} (x^(j))^beta for each beta in Lambda(G), in the system's order.
using MomentVector = std::vector<std::int64_t>;

MomentVector moment_vector(const MonomialSystem& system, const std::vector<std::vector<std::int64_t>>& tuple);

enum class CountMethod { bruteforce, mitm };
std::string to_string(CountMethod m);

struct CountResult {
    BigInt j;
    std::uint64_t x = 0;
    std::size_t r = 0;
    std::string system;
    CountMethod method = CountMethod::mitm;
    double seconds = 0;
};

/// J_r(G, X) by enumerating all X^(2rn) tuples (oracle scale).
CountResult jr_bruteforce(const MonomialSystem& system, std::size_t r, std::uint64_t x, const Budget& budget = {},
                          const ExecPolicy& policy = {});

/// J_r(G, X) = sum_v N(v)^2 with N(v) the number of r-tuples in [1, X]^n with
/// moment vector v. Needs X^(rn) tuples in memory.
CountResult jr_mitm(const MonomialSystem& system, std::size_t r, std::uint64_t x, const Budget& budget = {},
                    const ExecPolicy& policy = {});

CountResult count_jr(const MonomialSystem& system, std::size_t r, std::uint64_t x, CountMethod method,
                     const Budget& budget = {}, const ExecPolicy& policy = {});

/// Number of collections in (0, k]^(2r) with sum_j eps(j) (x^(j))^beta = 0 for
/// every beta; k may differ per coordinate.
BigInt vr_count(const MonomialSystem& system, std::size_t r, const std::vector<std::int64_t>& sides,
                const Budget& budget = {}, const ExecPolicy& policy = {});

/// Largest exponent among X^(rn) and X^(2rj + (n-j) - K_j), j = 1..n.
struct PredictedExponent {
    Rational exponent;
    std::size_t j_star = 0;         // 0 when the diagonal term X^(rn) attains the maximum
    std::vector<Rational> terms;    // terms[j], j = 0..n (terms[0] = rn)
    std::vector<Rational> k_values; // K_1..K_n
    bool large_r_regime = false;    // exponent 2rn - M from the r > R(d+1) result
};

/// K_j = j d/(j+1) C(j+d, j) for the standard system.
Rational standard_k(std::size_t j, std::uint32_t d);

/// Standard systems use standard_k. ACK systems need `k_values` (K_1..K_n).
/// Other systems are supported only for r > R(d+1), where the exponent is
/// 2rn - M. Ties between the diagonal and another term report j* = 0; ties
/// among the other terms report the smallest j. Throws UnsupportedSystem.
PredictedExponent predicted_exponent(const MonomialSystem& system, std::size_t r,
                                     const std::optional<std::vector<Rational>>& k_values = std::nullopt);

struct SlopeFit {
    double slope = 0;
    std::vector<CountResult> counts;
    PredictedExponent predicted;
};

/// Least-squares slope of log J against log X. Needs at least three distinct X.
SlopeFit slope_check(const MonomialSystem& system, std::size_t r, const std::vector<std::uint64_t>& xs,
                     CountMethod method = CountMethod::mitm, const Budget& budget = {}, const ExecPolicy& policy = {},
                     const std::optional<std::vector<Rational>>& k_values = std::nullopt);

}  // namespace burgess
