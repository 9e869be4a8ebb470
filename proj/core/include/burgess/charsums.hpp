#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "burgess/collection.hpp"
#include "burgess/exec.hpp"
#include "burgess/ff_core.hpp"
#include "burgess/polynomial.hpp"
#include "burgess/rational.hpp"
#include "burgess/systems.hpp"

namespace burgess {

/// Box (N, N+H]: N_i < x_i <= N_i + H_i.
struct BoxRegion {
    std::vector<std::int64_t> offset;  // N
    std::vector<std::int64_t> sides;   // H, all >= 1

    std::size_t dim() const noexcept { return sides.size(); }
    void validate(std::size_t n) const;
    /// Number of lattice points; long double so oversized boxes can be
    /// rejected by the budget rather than overflowing.
    long double volume() const noexcept;
};

struct SumResult {
    std::complex<double> value;
    std::uint64_t terms = 0;
    double roundoff_bound = 0;
};

/// sum over x in (N, N+H] of e(g(x)) chi(F(x)), visited lexicographically.
/// Partial sums over contiguous slices are combined in slice order.
SumResult mixed_sum(const IntPoly& form, const RealPoly& phase, const DirichletCharacter& chi, const BoxRegion& box,
                    const Budget& budget = {}, const ExecPolicy& policy = {});

/// Table of chi-exponents of F(m) for every m in (Z/q)^n, indexed with the
/// first coordinate most significant. kZero marks F(m) = 0.
class FormTable {
public:
    FormTable(const IntPoly& form, const DirichletCharacter& chi, const Budget& budget = {});

    std::size_t dim() const noexcept { return n_; }
    std::uint64_t modulus() const noexcept { return q_; }
    std::uint64_t size() const noexcept { return exps_.size(); }
    std::uint32_t exponent(std::uint64_t index) const noexcept { return exps_[index]; }
    const DirichletCharacter& character() const noexcept { return *chi_; }

private:
    std::size_t n_;
    std::uint64_t q_;
    const DirichletCharacter* chi_;
    std::vector<std::uint32_t> exps_;
};

/// Complete sum over m mod q of chi(prod_j F(m + x^(j))^delta(j)), kept as
/// exact counts: counts[t] = #{m : the product has chi-exponent t}.
struct MultSum {
    std::vector<std::uint64_t> counts;  // length Delta
    std::uint64_t zeros = 0;            // m where some factor vanishes
    std::complex<double> value;         // sum_t counts[t] e(t/Delta), summed in t order

    bool operator==(const MultSum& o) const { return counts == o.counts && zeros == o.zeros; }
};

enum class MultSumMethod { termwise, product_polynomial };

MultSum complete_mult_sum(const FormTable& table, const Collection& points);
MultSum complete_mult_sum(const IntPoly& form, const Collection& points, const DirichletCharacter& chi,
                          MultSumMethod method = MultSumMethod::termwise, const Budget& budget = {});

/// D_beta = sum_j eps(j) (x^(j))^beta for beta in Lambda(G), in the system's
/// order. Overflow-checked.
std::vector<std::int64_t> signed_moments(const MonomialSystem& system, const Collection& points);

/// 1 when every D_beta vanishes; with `modulus` Q, when Q^|beta| divides D_beta.
bool xi_indicator(const MonomialSystem& system, const Collection& points,
                  std::optional<std::uint64_t> modulus = std::nullopt);

/// Distinguished vertices theta_alpha = (c_beta Q^-|beta|) with
/// 0 <= c_beta < Q^|beta|; Q^M of them.
class BoxPartition {
public:
    BoxPartition(MonomialSystem system, std::uint64_t q_param);

    const MonomialSystem& system() const noexcept { return system_; }
    std::uint64_t parameter() const noexcept { return q_; }
    /// Q^|beta| per beta, the range of c_beta.
    const std::vector<std::uint64_t>& ranges() const noexcept { return ranges_; }
    /// Q^M; throws OverflowError beyond 2^64 - 1.
    std::uint64_t vertex_count() const;
    /// Digits c_beta of vertex `index` (last beta least significant).
    std::vector<std::uint64_t> vertex(std::uint64_t index) const;
    /// theta_alpha as exact rationals.
    std::vector<Rational> coordinates(std::uint64_t index) const;

private:
    MonomialSystem system_;
    std::uint64_t q_;
    std::vector<std::uint64_t> ranges_;
};

enum class AddSumMethod { factorized, vertices };

/// sum over vertices of e(sum_j eps(j) theta_alpha(x^(j))). `factorized`
/// multiplies the per-beta geometric sums, each summed term by term;
/// `vertices` enumerates all Q^M vertices.
SumResult additive_box_sum(const MonomialSystem& system, std::uint64_t q_param, const Collection& points,
                           AddSumMethod method = AddSumMethod::factorized, const Budget& budget = {});

/// ceil(2 r K).
std::uint64_t partition_parameter(std::size_t r, std::uint64_t k);

struct ProdLemmaReport {
    std::uint64_t q_param = 0;
    std::uint64_t weight = 0;
    bool hypothesis = false;      // Q >= 2 r K
    std::uint64_t checked = 0;    // collections
    std::uint64_t vertex_terms = 0;  // collections times Q^M
    std::uint64_t passed = 0;     // |Sigma_add - Q^M Xi| < 1e-6 Q^M
    std::uint64_t wraparound = 0;    // Xi_Q = 1 but Xi = 0
    std::vector<Collection> wraparound_examples;  // first few
    double max_error = 0;         // max |Sigma_add - Q^M Xi| / Q^M
    std::optional<Collection> first_failure;
    std::uint64_t in_variety = 0; // collections with Xi = 1
};

struct ProdLemmaOptions {
    std::size_t r = 1;
    std::uint64_t k = 1;                       // points drawn from (0, K]^n
    std::optional<std::uint64_t> q_param;      // default ceil(2 r K)
    std::optional<std::uint64_t> samples;      // exhaustive when empty
    std::uint64_t seed = 0;
    AddSumMethod method = AddSumMethod::factorized;
    Budget budget;
    ExecPolicy policy;
};

/// Checks Sigma_add = Q^M Xi over all collections in (0, K]^(2rn), or over
/// seeded uniform samples. Below the hypothesis Q >= 2rK the report counts
/// wraparound collections instead of failing. Throws IdentityViolation (with
/// the collection) when the identity fails under the hypothesis and
/// `throw_on_failure` is set.
ProdLemmaReport verify_prod_lemma(const MonomialSystem& system, const ProdLemmaOptions& options,
                                  bool throw_on_failure = false);

/// B_{n,r}(j; k) with Theta = floor((r-1)/(n-1)). Needs r >= n >= 2,
/// 0 <= j <= n and sorted k (UnsortedSides otherwise).
BigInt b_function(std::int64_t n, std::int64_t r, std::int64_t j, const std::vector<std::int64_t>& k);
/// Natural log of B, for magnitudes beyond double range.
long double log_b_function(std::int64_t n, std::int64_t r, std::int64_t j, const std::vector<std::int64_t>& k);

struct BSumCheck {
    bool hypothesis = false;       // q^(1/2) K_1^-Theta <= 1
    long double ratio = 0;         // q^(1/2) K_1^-Theta
    long double lhs = 0;           // sum_{j=1}^n q^(j/2) / B(j)
    long double rhs = 0;           // n q^(1/2) K_1^-Theta
    long double partial_lhs = 0;   // sum_{j=1}^{n-1} q^(j/2) / B(j)
    long double partial_rhs = 0;   // sum_{j=1}^{n-1} ratio^j
    bool holds = true;             // both inequalities (only meaningful with hypothesis)
};

BSumCheck check_b_sum(std::int64_t n, std::int64_t r, long double q, const std::vector<std::int64_t>& k);

struct BSumReport {
    std::uint64_t trials = 0;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;     // hypothesis failed
    std::uint64_t violations = 0;
    long double worst_margin = 0;  // max lhs / rhs over checked samples
    struct Sample {
        std::int64_t n, r;
        std::uint64_t q;
        std::vector<std::int64_t> k;
        BSumCheck check;
    };
    std::optional<Sample> first_violation;
};

struct BSumOptions {
    std::int64_t n_min = 2, n_max = 4;
    std::int64_t r_max = 20;
    std::uint64_t q_max = 10'000;
    std::int64_t k_span = 64;      // K_1 drawn above its hypothesis floor by at most this
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    /// When set, n, r and q are fixed and only K is sampled.
    std::optional<std::int64_t> n, r;
    std::optional<std::uint64_t> q;
};

/// Samples (n, r, prime q, sorted K) with the hypothesis enforced by
/// construction. Throws InequalityViolation when `throw_on_failure`.
BSumReport verify_b_sum_lemma(const BSumOptions& options, bool throw_on_failure = false);

}  // namespace burgess
