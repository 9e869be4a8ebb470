#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burgess/polynomial.hpp"

namespace burgess {

enum class SystemKind { standard, ack, custom };

/// A reduced monomial system G = { x^beta : beta in Lambda(G) }.
///
/// R = |Lambda| and M = sum of |beta| are always recomputed from Lambda.
/// Lambda is stored graded: ascending total degree, descending lex within a
/// degree, e.g. (1,0),(0,1),(2,0),(1,1),(0,2).
class MonomialSystem {
public:
    /// Arbitrary exponent set. Rejects empty sets, the zero multi-index,
    /// duplicates and dimension mismatches (DegenerateSystem). Does not
    /// require the unit multi-indices; see has_linear_monomials().
    static MonomialSystem custom(std::size_t n, std::vector<Monomial> exponents);

    std::size_t dim() const noexcept { return n_; }
    const std::vector<Monomial>& exponents() const noexcept { return lambda_; }
    std::uint32_t degree() const noexcept { return d_; }
    std::uint64_t rank() const noexcept { return lambda_.size(); }
    std::uint64_t weight() const noexcept { return m_; }
    SystemKind kind() const noexcept { return kind_; }
    /// Per-variable caps and total cap for ack systems (total cap = d for standard).
    const std::vector<std::uint32_t>& caps() const noexcept { return caps_; }
    std::uint32_t total_cap() const noexcept { return total_cap_; }

    bool contains(const Monomial& beta) const;
    bool has_linear_monomials() const;

    /// Short descriptor: "standard(2,2)", "ack(1,1;2)" or "custom(1,0;0,1)".
    std::string descriptor() const;

    bool operator==(const MonomialSystem& o) const { return n_ == o.n_ && lambda_ == o.lambda_; }

private:
    friend MonomialSystem standard_system(std::size_t n, std::uint32_t d);
    friend MonomialSystem ack_system(std::vector<std::uint32_t> caps, std::uint32_t k);

    MonomialSystem(std::size_t n, std::vector<Monomial> exponents, SystemKind kind);

    std::size_t n_ = 0;
    std::vector<Monomial> lambda_;
    std::uint32_t d_ = 0;
    std::uint64_t m_ = 0;
    SystemKind kind_ = SystemKind::custom;
    std::vector<std::uint32_t> caps_;
    std::uint32_t total_cap_ = 0;
};

/// All multi-indices with 1 <= |beta| <= d.
MonomialSystem standard_system(std::size_t n, std::uint32_t d);

/// { beta : beta_i <= k_i, 1 <= |beta| <= k }. Throws DegenerateSystem when
/// some variable has no monomial.
MonomialSystem ack_system(std::vector<std::uint32_t> caps, std::uint32_t k);

/// Closed forms for the standard system: R = C(n+d, n) - 1 and
/// M = d * C(n+d, n) * n / (n+1).
std::uint64_t standard_rank(std::size_t n, std::uint32_t d);
std::uint64_t standard_weight(std::size_t n, std::uint32_t d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Outcome of the translation-dilation invariance test.
struct TdiCertificate {
    bool tdi = true;
    /// When not TDI: the shifted monomial beta whose expansion leaves the span,
    /// the offending x-exponent gamma, and the coefficient C(beta, gamma) of
    /// xi^(beta-gamma) x^gamma, printed as e.g. "2*xi1*x1".
    std::optional<Monomial> beta;
    std::optional<Monomial> gamma;
    std::int64_t coefficient = 0;
    std::string term;
};

/// Expands (x + xi)^beta symbolically for every beta in Lambda and checks each
/// x-monomial lies in Lambda u {0}.
TdiCertificate is_tdi(const MonomialSystem& system);

/// Downward-closure of Lambda under the componentwise order (nonzero part).
bool is_downward_closed(const MonomialSystem& system);

/// Parses "standard n d", "ack k1,k2,... k" or "custom b11,b12;b21,b22;...".
MonomialSystem parse_system(const std::string& descriptor);

}  // namespace burgess
