#include "burgess/polynomial.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace burgess {

IntegerRing::value_type IntegerRing::neg(value_type a) const {
    if (a == std::numeric_limits<value_type>::min()) throw OverflowError("integer coefficient overflow");
    return -a;
}

IntegerRing::value_type IntegerRing::add(value_type a, value_type b) const {
    value_type r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer coefficient overflow");
    return r;
}

IntegerRing::value_type IntegerRing::sub(value_type a, value_type b) const {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer coefficient overflow");
    return r;
}

IntegerRing::value_type IntegerRing::mul(value_type a, value_type b) const {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer coefficient overflow");
    return r;
}

ResidueRing::ResidueRing(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
}

ResidueRing::value_type ResidueRing::inv(value_type a) const {
    if (a % q_ == 0) throw Error("inverse of zero mod " + std::to_string(q_));
    return mod_pow(a, q_ - 2, q_);
}

FieldPoly reduce_mod(const IntPoly& p, std::uint64_t q) {
    ResidueRing ring(q);
    FieldPoly out(p.dim(), ring);
    for (const auto& [m, c] : p.terms()) out.add_term(m, ring.from_int(c));
    return out;
}

RealPoly to_real(const IntPoly& p) {
    RealPoly out(p.dim());
    for (const auto& [m, c] : p.terms()) out.add_term(m, static_cast<double>(c));
    return out;
}

std::int64_t evaluate(const IntPoly& p, std::span<const std::int64_t> x) {
    if (x.size() != p.dim()) throw DimensionMismatch("evaluate: point dimension");
    const IntegerRing ring;
    std::int64_t total = 0;
    for (const auto& [m, c] : p.terms()) {
        std::int64_t term = c;
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::uint32_t k = 0; k < m.exps[i]; ++k) term = ring.mul(term, x[i]);
        total = ring.add(total, term);
    }
    return total;
}

Residue evaluate(const FieldPoly& p, std::span<const std::int64_t> x) {
    if (x.size() != p.dim()) throw DimensionMismatch("evaluate: point dimension");
    const ResidueRing& ring = p.ring();
    Residue total = 0;
    for (const auto& [m, c] : p.terms()) {
        Residue term = c;
        for (std::size_t i = 0; i < m.dim(); ++i)
            if (m.exps[i]) term = ring.mul(term, mod_pow(ring.from_int(x[i]), m.exps[i], ring.modulus()));
        total = ring.add(total, term);
    }
    return total;
}

double evaluate(const RealPoly& p, std::span<const std::int64_t> x) {
    if (x.size() != p.dim()) throw DimensionMismatch("evaluate: point dimension");
    long double total = 0.0L;
    for (const auto& [m, c] : p.terms()) {
        long double term = c;
        for (std::size_t i = 0; i < m.dim(); ++i)
            term *= std::pow(static_cast<long double>(x[i]), static_cast<long double>(m.exps[i]));
        total += term;
    }
    return static_cast<double>(total);
}

long double evaluate_mod1(const RealPoly& p, std::span<const std::int64_t> x) {
    if (x.size() != p.dim()) throw DimensionMismatch("evaluate: point dimension");
    long double total = 0.0L;
    for (const auto& [m, c] : p.terms()) {
        // Split the coefficient into integer and fractional parts; the integer
        // part times an integer monomial contributes nothing mod 1.
        const long double cf = static_cast<long double>(c) - std::floor(static_cast<long double>(c));
        long double mono = 1.0L;
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::uint32_t k = 0; k < m.exps[i]; ++k) mono *= static_cast<long double>(x[i]);
        long double term = cf * mono;
        term -= std::floor(term);
        total += term;
        total -= std::floor(total);
    }
    return total;
}

namespace {

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (m.exps[i] == 0) continue;
        out += "*x" + std::to_string(i + 1);
        if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
    }
    return out;
}

std::string real_text(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <class Poly, class Fmt>
std::string render(const Poly& p, Fmt&& coefficient) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [negative, mag] = coefficient(it->second);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += mag + monomial_text(it->first);
        first = false;
    }
    return out;
}

}  // namespace

std::string to_string(const IntPoly& p) {
    return render(p, [](std::int64_t c) {
        // |INT64_MIN| is not representable; print via unsigned magnitude.
        const auto mag = c < 0 ? ~static_cast<std::uint64_t>(c) + 1 : static_cast<std::uint64_t>(c);
        return std::pair{c < 0, std::to_string(mag)};
    });
}

std::string to_string(const FieldPoly& p) {
    return render(p, [](std::uint64_t c) { return std::pair{false, std::to_string(c)}; });
}

std::string to_string(const RealPoly& p) {
    return render(p, [](double c) { return std::pair{std::signbit(c), real_text(std::fabs(c))}; });
}

}  // namespace burgess
