#include "burgess/ff_core.hpp"
#include "wide_int.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "burgess/errors.hpp"

namespace burgess {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<detail::u128>(a) * b) % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mod_mul(result, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (q % p == 0) return q == p;
    }
    std::uint64_t d = q - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = mod_pow(a, d, q);
        if (x == 1 || x == q - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, q);
            if (x == q - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

std::uint64_t find_primitive_root(std::uint64_t q) {
    if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
    if (q == 2) return 1;
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool generator = true;
        for (std::uint64_t p : factors) {
            if (mod_pow(g, (q - 1) / p, q) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw NotPrime("no primitive root found for " + std::to_string(q));
}

PrimeField::PrimeField(std::uint64_t q, std::uint64_t table_limit) : q_(q), g_(find_primitive_root(q)) {
    if (q > table_limit)
        throw InvalidRange("modulus " + std::to_string(q) + " exceeds the discrete-log table limit " +
                           std::to_string(table_limit));
    dlog_.assign(q, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
        dlog_[x] = static_cast<std::uint32_t>(k);
        x = mod_mul(x, g_, q);
    }
}

Residue PrimeField::reduce(std::int64_t a) const noexcept {
    const auto m = static_cast<std::int64_t>(q_);
    std::int64_t r = a % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
}

Residue PrimeField::inv(Residue a) const {
    if (a % q_ == 0) throw Error("inverse of zero mod " + std::to_string(q_));
    return mod_pow(a, q_ - 2, q_);
}

std::uint64_t PrimeField::dlog(Residue a) const {
    if (a % q_ == 0) throw Error("discrete log of zero");
    return dlog_[a % q_];
}

std::complex<double> root_of_unity(std::uint64_t t, std::uint64_t n) {
    t %= n;
    if (t == 0) return {1.0, 0.0};
    if (4 * t == n) return {0.0, 1.0};
    if (2 * t == n) return {-1.0, 0.0};
    if (4 * t == 3 * n) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> unit_phase(long double t) {
    long double frac = t - std::floor(t);
    if (frac >= 1.0L) frac = 0.0L;
    if (frac == 0.0L) return {1.0, 0.0};
    if (frac == 0.5L) return {-1.0, 0.0};
    if (frac == 0.25L) return {0.0, 1.0};
    if (frac == 0.75L) return {0.0, -1.0};
    const long double angle = 2.0L * std::numbers::pi_v<long double> * frac;
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

double ComplexAcc::roundoff_bound() const noexcept {
    return static_cast<double>(term_count) * std::ldexp(1.0, -48);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const PrimeField> field, std::uint32_t order)
    : field_(std::move(field)), order_(order) {
    const std::uint64_t q = field_->modulus();
    if (order < 2) throw OrderOne("character order must be >= 2, got " + std::to_string(order));
    if ((q - 1) % order != 0)
        throw OrderNotDividing("order " + std::to_string(order) + " does not divide q-1 = " + std::to_string(q - 1));
    exps_.assign(q, kZero);
    for (Residue a = 1; a < q; ++a) exps_[a] = static_cast<std::uint32_t>(field_->dlog(a) % order_);
    roots_.reserve(order_);
    for (std::uint32_t t = 0; t < order_; ++t) roots_.push_back(root_of_unity(t, order_));
}

std::optional<std::uint32_t> DirichletCharacter::exponent(std::int64_t a) const noexcept {
    const std::uint32_t e = exps_[field_->reduce(a)];
    if (e == kZero) return std::nullopt;
    return e;
}

std::complex<double> DirichletCharacter::operator()(std::int64_t a) const noexcept {
    const std::uint32_t e = exps_[field_->reduce(a)];
    if (e == kZero) return {0.0, 0.0};
    return roots_[e];
}

DirichletCharacter build_character(std::uint64_t q, std::uint32_t order) {
    if (order < 2) throw OrderOne("character order must be >= 2, got " + std::to_string(order));
    if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
    if ((q - 1) % order != 0)
        throw OrderNotDividing("order " + std::to_string(order) + " does not divide q-1 = " + std::to_string(q - 1));
    return DirichletCharacter(std::make_shared<const PrimeField>(q), order);
}

}  // namespace burgess
