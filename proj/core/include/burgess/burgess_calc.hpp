#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burgess/rational.hpp"
#include "burgess/systems.hpp"

namespace burgess {

/// How Theta is obtained from (n, r).
///
/// The default is floor((r-1)/(n-1)) and requires n >= 2. `one_dim` enables
/// the convention Theta = r for n = 1. A user-supplied `alpha` switches to the
/// conjectural rule Theta = floor(r / alpha); reports produced this way are
/// flagged as conjectural.
struct ThetaRule {
    bool one_dim = false;
    std::optional<Rational> alpha;
};

std::int64_t theta(std::int64_t n, std::int64_t r, const ThetaRule& rule = {});

/// 1/2 - 1/(2(n+1)).
Rational beta_n(std::int64_t n);

/// Which r are admissible for the bound.
enum class RangeRule {
    theorem,  // Theta > M and r > (M+1)(n-1) + 1 (r > M+1 when n = 2)
    theta_only,  // Theta > M
    large_r,  // r > R(d+1) and Theta > M
};

/// Exponents of |S| << H^a q^(b + eps) and the derived thresholds; eps is 0 in
/// all displayed values. Fields depending on Theta - M > 0 are empty otherwise.
struct ExponentReport {
    std::int64_t n = 0, d = 0, r = 0;
    std::int64_t theta = 0;
    std::uint64_t weight = 0, rank = 0;
    std::string system;
    RangeRule range = RangeRule::theorem;
    bool conjectural = false;
    bool valid = false;
    std::vector<std::string> reasons;  // why valid is false

    Rational beta_n;
    Rational a;
    std::optional<Rational> b;
    std::optional<Rational> h_exponent_cap;  // 1/2 + 1/(4(Theta - M))
    std::optional<Rational> beta_threshold;
};

ExponentReport exponent_report(std::int64_t n, std::int64_t d, std::int64_t r, const ThetaRule& rule = {});

/// Same calculus with M, R and d taken from G. Standard systems use the
/// theorem range, ACK systems need only Theta > M, other systems need the
/// large-r range r > R(d+1). Throws NotTDI, or DegenerateSystem when G lacks
/// a linear monomial in some variable.
ExponentReport tdi_theorem_report(const MonomialSystem& system, std::int64_t r, const ThetaRule& rule = {});

/// 1/2 - (Theta-M-1) / (2(Theta-M)(n+1)). Throws InvalidRange if Theta <= M.
Rational nontrivial_threshold(std::int64_t n, std::int64_t d, std::int64_t r, const ThetaRule& rule = {});

/// Window (1/2) H q^(-1/(2(Theta-mu))) <= P < H q^(-1/(2(Theta-mu))).
struct PWindow {
    std::int64_t theta = 0;
    std::int64_t mu = 0;
    long double lower = 0;
    long double upper = 0;
    bool hp_below_q = false;          // H * upper < q
    bool below_theta_cap = false;     // upper <= H q^(-1/(2 Theta))
};

/// Throws EmptyWindow when Theta <= mu or H >= q^(1/2 + 1/(4(Theta-mu))).
/// mu defaults to M.
PWindow p_window(std::int64_t n, std::int64_t d, std::int64_t r, long double h, long double q,
                 std::optional<std::int64_t> mu = std::nullopt);

/// Exact nonemptiness for H = q^beta: beta < 1/2 + 1/(4(Theta-mu)), Theta > mu.
bool window_nonempty(std::int64_t n, std::int64_t d, std::int64_t r, const Rational& beta,
                     std::optional<std::int64_t> mu = std::nullopt);

/// Savings at H = q^(beta_n + kappa).
struct DeltaReport {
    std::int64_t n = 0, d = 0;
    Rational kappa;
    std::int64_t r = 0;            // r used
    bool r_from_rule = false;      // r = round((n-1)/((n+1) kappa))
    std::int64_t theta = 0;
    std::uint64_t weight = 0;
    Rational delta;
    Rational delta_over_kappa_sq;
    Rational asymptotic_ratio;     // (n+1)^2 / (4(n-1))
    /// Parameters of f(r) = (b r - c) / (r (r - e)) and its real maximizer.
    Rational b, c, e;
    double continuous_argmax = 0;
    /// Integer r in the valid range maximizing delta exactly.
    std::int64_t best_r = 0;
    Rational best_delta;
};

/// delta = (2 kappa (n+1)(Theta-M) - 1) / (4 r (Theta-M)).
Rational delta_formula(std::int64_t n, std::uint64_t weight, std::int64_t theta, std::int64_t r, const Rational& kappa);

/// Throws KappaTooLarge when the rounded r leaves Theta <= M, InvalidRange
/// for an explicit r with Theta <= M or a non-positive kappa.
DeltaReport delta_savings(std::int64_t n, std::int64_t d, const Rational& kappa,
                          std::optional<std::int64_t> r = std::nullopt);

/// Larger root of b r^2 - 2 c r + c e = 0, the maximizer of (b r - c)/(r (r - e)).
double continuous_argmax(const Rational& b, const Rational& c, const Rational& e);

/// Shape of the right-hand side
///   (H/P)^(M/2r) H^(-n/2r) P^(n-1/2r) q^(n/4r) (log q)^(n+1)
///     * { J^(1/2r) + q^(1/4r) (H/P)^(n - Theta/2r) }
/// with the implied constant set to 1.
struct PropBound {
    long double prefactor = 0;
    long double vinogradov_term = 0;
    long double shift_term = 0;
    long double total = 0;
};

/// Throws HypothesisViolated naming each failed condition among r >= n,
/// P <= H, HP < q and P <= H q^(-1/(2 Theta)).
PropBound prop_bound_rhs(std::int64_t n, std::uint64_t weight, std::int64_t r, long double h, long double p,
                         long double q, long double j_value);

}  // namespace burgess
