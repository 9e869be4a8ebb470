#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace burgess {

using Residue = std::uint64_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t q);

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Smallest g in [2, q-1] generating (Z/q)^x; 1 for q = 2. Throws NotPrime.
std::uint64_t find_primitive_root(std::uint64_t q);

/// Largest modulus for which a dense discrete-log table is built by default.
inline constexpr std::uint64_t kDefaultTableLimit = 10'000'000ULL;

/// Arithmetic in Z/q for a prime q, with a dense discrete-log table for the
/// smallest primitive root. Immutable after construction.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t q, std::uint64_t table_limit = kDefaultTableLimit);

    std::uint64_t modulus() const noexcept { return q_; }
    std::uint64_t primitive_root() const noexcept { return g_; }

    Residue reduce(std::int64_t a) const noexcept;
    Residue add(Residue a, Residue b) const noexcept { return a + b >= q_ ? a + b - q_ : a + b; }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Residue mul(Residue a, Residue b) const noexcept { return mod_mul(a, b, q_); }
    Residue pow(Residue a, std::uint64_t e) const noexcept { return mod_pow(a, e, q_); }
    Residue inv(Residue a) const;

    /// Discrete log of a nonzero residue base primitive_root(), in [0, q-2].
    std::uint64_t dlog(Residue a) const;
    /// primitive_root()^k.
    Residue exp(std::uint64_t k) const noexcept { return mod_pow(g_, k % (q_ - 1), q_); }

private:
    std::uint64_t q_;
    std::uint64_t g_;
    std::vector<std::uint32_t> dlog_;  // indexed by residue; entry 0 unused
};

/// Non-principal character of exact order Delta, normalized so that
/// chi(g) = exp(2 pi i / Delta) for the smallest primitive root g.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const PrimeField> field, std::uint32_t order);

    const PrimeField& field() const noexcept { return *field_; }
    std::shared_ptr<const PrimeField> field_ptr() const noexcept { return field_; }
    std::uint64_t modulus() const noexcept { return field_->modulus(); }
    std::uint32_t order() const noexcept { return order_; }

    /// Exponent t with chi(a) = exp(2 pi i t / Delta); nullopt when q | a.
    std::optional<std::uint32_t> exponent(std::int64_t a) const noexcept;
    /// Same for an already reduced residue; returns kZero when a == 0.
    std::uint32_t exponent_of_residue(Residue a) const noexcept { return exps_[a]; }
    static constexpr std::uint32_t kZero = 0xffffffffu;

    /// exp(2 pi i t / Delta) for t taken mod Delta.
    std::complex<double> root(std::uint64_t t) const noexcept { return roots_[t % order_]; }

    std::complex<double> operator()(std::int64_t a) const noexcept;

private:
    std::shared_ptr<const PrimeField> field_;
    std::uint32_t order_;
    std::vector<std::uint32_t> exps_;
    std::vector<std::complex<double>> roots_;
};

/// Canonical character of order Delta mod q. Throws OrderOne, OrderNotDividing, NotPrime.
DirichletCharacter build_character(std::uint64_t q, std::uint32_t order);

/// chi(a mod q), zero when q | a.
inline std::complex<double> char_eval(const DirichletCharacter& chi, std::int64_t a) { return chi(a); }

/// exp(2 pi i t / n) with exact values at multiples of a quarter turn.
std::complex<double> root_of_unity(std::uint64_t t, std::uint64_t n);

/// e(t) = exp(2 pi i t), with t reduced mod 1 first.
std::complex<double> unit_phase(long double t);

/// Running sum of unit-magnitude terms with a term counter.
struct ComplexAcc {
    double re = 0.0;
    double im = 0.0;
    std::uint64_t term_count = 0;

    void add(std::complex<double> z) noexcept {
        re += z.real();
        im += z.imag();
        ++term_count;
    }
    void merge(const ComplexAcc& other) noexcept {
        re += other.re;
        im += other.im;
        term_count += other.term_count;
    }
    std::complex<double> value() const noexcept { return {re, im}; }
    /// Roundoff allowance term_count * 2^-48.
    double roundoff_bound() const noexcept;
};

}  // namespace burgess
