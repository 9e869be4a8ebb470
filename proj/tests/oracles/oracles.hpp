#pragma once

// Slow reference implementations used to cross-check the library. They rely
// only on polynomial arithmetic and direct evaluation of definitions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "burgess/algebra.hpp"
#include "burgess/collection.hpp"
#include "burgess/polynomial.hpp"
#include "burgess/systems.hpp"

namespace oracle {

using namespace burgess;

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;  // small moduli only
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

/// Multiplicative order of a mod q by repeated multiplication.
inline std::uint64_t order_of(std::uint64_t a, std::uint64_t q) {
    std::uint64_t x = a % q, k = 1;
    while (x != 1) {
        x = x * a % q;
        ++k;
    }
    return k;
}

inline std::uint64_t smallest_generator(std::uint64_t q) {
    for (std::uint64_t g = 1; g < q; ++g)
        if (order_of(g, q) == q - 1) return g;
    return 0;
}

/// chi(a) for the order-Delta character with chi(g) = e(1/Delta), g the
/// smallest generator; found by walking powers of g.
inline std::complex<double> naive_character(std::int64_t a, std::uint64_t q, std::uint32_t order) {
    const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
                                              static_cast<std::int64_t>(q));
    if (r == 0) return 0;
    const std::uint64_t g = smallest_generator(q);
    std::uint64_t x = 1, k = 0;
    while (x != r) {
        x = x * g % q;
        ++k;
    }
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k % order) / order);
}

/// Every non-zero polynomial in F_q[x1..xn] of total degree <= d whose
/// lexicographically leading coefficient is 1.
inline std::vector<FieldPoly> monic_polynomials(std::size_t n, std::uint32_t d, std::uint64_t q) {
    std::vector<Monomial> monos;
    Monomial m(n);
    // all exponent vectors with total degree <= d
    std::vector<std::uint32_t> e(n, 0);
    while (true) {
        std::uint32_t s = 0;
        for (auto v : e) s += v;
        if (s <= d) monos.emplace_back(e);
        std::size_t i = 0;
        while (i < n && ++e[i] > d) e[i++] = 0;
        if (i == n) break;
    }
    std::vector<FieldPoly> out;
    std::vector<std::uint64_t> coeffs(monos.size(), 0);
    const ResidueRing ring(q);
    while (true) {
        std::size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] == q) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
        FieldPoly p(n, ring);
        for (std::size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], coeffs[k]);
        if (p.degree() >= 1 && p.leading().second == 1) out.push_back(p);
    }
    return out;
}

/// Candidate divisors p^Delta for trial division, largest degree first.
struct PowerCandidates {
    std::vector<FieldPoly> powers;
};

inline PowerCandidates power_candidates(std::size_t n, std::uint32_t max_deg, std::uint64_t q, std::uint32_t order) {
    PowerCandidates c;
    for (const auto& p : monic_polynomials(n, max_deg, q)) c.powers.push_back(p.pow(order));
    return c;
}

/// Delta-th-power-free part by trial division: strip p^Delta for every
/// candidate p of positive degree until none divides.
inline FieldPoly trial_power_free_part(FieldPoly f, const PowerCandidates& cands) {
    bool progress = true;
    while (progress && !f.is_zero()) {
        progress = false;
        for (const auto& pw : cands.powers) {
            if (pw.degree() > f.degree() || !pw.leading().first.divides(f.leading().first)) continue;
            if (auto quo = divide_exact(f, pw)) {
                f = *quo;
                progress = true;
                break;
            }
        }
    }
    return f;
}

inline FieldPoly trial_power_free_part(const FieldPoly& f, std::uint32_t order) {
    const std::uint32_t max_deg = f.degree() / order;
    if (max_deg == 0) return f;
    return trial_power_free_part(f, power_candidates(f.dim(), max_deg, f.ring().modulus(), order));
}

/// Every invertible matrix over F_q, rows listed first.
inline std::vector<std::vector<std::vector<std::uint64_t>>> general_linear_group(std::size_t n, std::uint64_t q) {
    std::vector<std::vector<std::vector<std::uint64_t>>> out;
    std::vector<std::uint64_t> entries(n * n, 0);
    auto det_nonzero = [&](std::vector<std::uint64_t> a) {
        // Gaussian elimination mod q.
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && a[piv * n + c] == 0) ++piv;
            if (piv == n) return false;
            for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
            const std::uint64_t inv = pow_mod(a[c * n + c], q - 2, q);
            for (std::size_t r = c + 1; r < n; ++r) {
                const std::uint64_t f = a[r * n + c] * inv % q;
                for (std::size_t k = 0; k < n; ++k) a[r * n + k] = (a[r * n + k] + (q - f) * a[c * n + k]) % q;
            }
        }
        return true;
    };
    while (true) {
        if (det_nonzero(entries)) {
            std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
            for (std::size_t i = 0; i < n * n; ++i) m[i / n][i % n] = entries[i];
            out.push_back(m);
        }
        std::size_t i = 0;
        while (i < entries.size() && ++entries[i] == q) entries[i++] = 0;
        if (i == entries.size()) break;
    }
    return out;
}

/// Admissible iff the power-free part is non-constant and no h(x A) with
/// A in GL_n(F_q) is free of x1.
inline bool gl_admissible_part(const FieldPoly& h,
                               const std::vector<std::vector<std::vector<std::uint64_t>>>& group) {
    if (h.degree() == 0) return false;
    const std::size_t n = h.dim();
    const ResidueRing& ring = h.ring();
    for (const auto& a : group) {
        std::vector<FieldPoly> images;
        for (std::size_t i = 0; i < n; ++i) {
            FieldPoly img(n, ring);  // (x A)_i = sum_k x_k A[k][i]
            for (std::size_t k = 0; k < n; ++k) img.add_term(Monomial::unit(n, k), a[k][i]);
            images.push_back(img);
        }
        const FieldPoly t = substitute(h, std::span<const FieldPoly>(images));
        if (t.degree_in(0) == 0) return false;
    }
    return true;
}

inline bool gl_admissible(const FieldPoly& f, std::uint32_t order,
                          const std::vector<std::vector<std::vector<std::uint64_t>>>& group) {
    return gl_admissible_part(trial_power_free_part(f, order), group);
}

/// J_r(G, X) by enumerating every 2r-tuple and comparing the two moment sums.
inline std::uint64_t naive_jr(const MonomialSystem& system, std::size_t r, std::int64_t x) {
    const std::size_t n = system.dim();
    const std::size_t len = 2 * r * n;
    std::vector<std::int64_t> v(len, 1);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (const auto& beta : system.exponents()) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < 2 * r; ++j) {
                std::int64_t term = 1;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::uint32_t k = 0; k < beta.exps[i]; ++k) term *= v[j * n + i];
                s += j < r ? term : -term;
            }
            if (s != 0) {
                ok = false;
                break;
            }
        }
        count += ok;
        std::size_t i = 0;
        while (i < len && ++v[i] > x) v[i++] = 1;
        if (i == len) break;
    }
    return count;
}

/// J_r for the linear system in one variable via the sum-count convolution:
/// sum_s N(s)^2 with N(s) = #{(x_1..x_r) in [1,X]^r : sum = s}.
inline std::uint64_t linear_one_dim_jr(std::size_t r, std::uint64_t x) {
    std::vector<std::uint64_t> ways{1};
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<std::uint64_t> next(ways.size() + x, 0);
        for (std::size_t s = 0; s < ways.size(); ++s)
            for (std::uint64_t t = 1; t <= x; ++t) next[s + t] += ways[s];
        ways = next;
    }
    std::uint64_t j = 0;
    for (auto w : ways) j += w * w;
    return j;
}

/// sum_m chi(prod_j F(m + x^(j))^delta(j)) straight from the definition.
inline std::complex<double> direct_mult_sum(const IntPoly& form, const Collection& c, std::uint64_t q,
                                            std::uint32_t order) {
    const std::size_t n = form.dim();
    std::vector<std::int64_t> m(n, 0);
    std::complex<double> total = 0;
    while (true) {
        std::complex<double> term = 1;
        for (std::size_t j = 1; j <= c.size(); ++j) {
            std::vector<std::int64_t> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = m[i] + c.points[j - 1][i];
            const auto chi = naive_character(evaluate(form, y), q, order);
            term *= j % 2 == 1 ? chi : std::conj(chi);
        }
        total += term;
        std::size_t i = 0;
        while (i < n && ++m[i] == static_cast<std::int64_t>(q)) m[i++] = 0;
        if (i == n) break;
    }
    return total;
}

/// sum over all distinguished vertices of e(sum_beta c_beta D_beta / Q^|beta|).
inline std::complex<double> direct_vertex_sum(const MonomialSystem& system, std::uint64_t qp, const Collection& c) {
    const auto& lambda = system.exponents();
    std::vector<std::int64_t> d(lambda.size(), 0);
    std::vector<std::uint64_t> range(lambda.size());
    for (std::size_t b = 0; b < lambda.size(); ++b) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            std::int64_t t = 1;
            for (std::size_t i = 0; i < system.dim(); ++i)
                for (std::uint32_t k = 0; k < lambda[b].exps[i]; ++k) t *= c.points[j][i];
            d[b] += j % 2 == 0 ? t : -t;
        }
        range[b] = 1;
        for (std::uint32_t k = 0; k < lambda[b].degree(); ++k) range[b] *= qp;
    }
    std::vector<std::uint64_t> cv(lambda.size(), 0);
    std::complex<double> total = 0;
    while (true) {
        long double phase = 0;
        for (std::size_t b = 0; b < lambda.size(); ++b) {
            const auto m = static_cast<std::int64_t>(range[b]);
            const std::int64_t num = ((static_cast<std::int64_t>(cv[b]) * (d[b] % m)) % m + m) % m;
            phase += static_cast<long double>(num) / static_cast<long double>(range[b]);
        }
        total += std::polar(1.0, static_cast<double>(2 * std::numbers::pi_v<long double> * phase));
        std::size_t i = 0;
        while (i < cv.size() && ++cv[i] == range[i]) cv[i++] = 0;
        if (i == cv.size()) break;
    }
    return total;
}

/// Number of monomials with 1 <= |beta| <= d in n variables and their total degree.
inline std::pair<std::uint64_t, std::uint64_t> count_monomials(std::size_t n, std::uint32_t d) {
    std::uint64_t r = 0, m = 0;
    std::vector<std::uint32_t> e(n, 0);
    while (true) {
        std::uint32_t s = 0;
        for (auto v : e) s += v;
        if (s >= 1 && s <= d) {
            ++r;
            m += s;
        }
        std::size_t i = 0;
        while (i < n && ++e[i] > d) e[i++] = 0;
        if (i == n) break;
    }
    return {r, m};
}

}  // namespace oracle
