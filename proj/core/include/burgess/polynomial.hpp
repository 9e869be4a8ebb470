#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "burgess/errors.hpp"
#include "burgess/ff_core.hpp"

namespace burgess {

/// Multi-index beta = (beta_1, ..., beta_n); ordered lexicographically.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}
    Monomial(std::initializer_list<std::uint32_t> e) : exps(e) {}

    static Monomial unit(std::size_t n, std::size_t i) {
        Monomial m(n);
        m.exps.at(i) = 1;
        return m;
    }

    std::size_t dim() const noexcept { return exps.size(); }
    std::uint32_t degree() const noexcept { return std::accumulate(exps.begin(), exps.end(), 0u); }
    bool is_constant() const noexcept { return degree() == 0; }

    /// Componentwise <=.
    bool divides(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += other.exps[i];
        return out;
    }

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

// ---------------------------------------------------------------------------
// Coefficient rings. Each provides value_type and the handful of operations
// MultiPoly needs; integer arithmetic is overflow-checked.
// ---------------------------------------------------------------------------

struct IntegerRing {
    using value_type = std::int64_t;
    static constexpr const char* kName = "integer";

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(std::int64_t v) const noexcept { return v; }
    bool is_zero(value_type a) const noexcept { return a == 0; }
    value_type neg(value_type a) const;
    value_type add(value_type a, value_type b) const;
    value_type sub(value_type a, value_type b) const;
    value_type mul(value_type a, value_type b) const;
    bool operator==(const IntegerRing&) const noexcept { return true; }
};

/// Z/q for prime q; residues are kept in [0, q).
class ResidueRing {
public:
    using value_type = std::uint64_t;
    static constexpr const char* kName = "residue";

    ResidueRing() : q_(2) {}
    explicit ResidueRing(std::uint64_t q);

    std::uint64_t modulus() const noexcept { return q_; }
    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1 % q_; }
    value_type from_int(std::int64_t v) const noexcept {
        const auto m = static_cast<std::int64_t>(q_);
        const std::int64_t r = v % m;
        return static_cast<value_type>(r < 0 ? r + m : r);
    }
    bool is_zero(value_type a) const noexcept { return a == 0; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : q_ - a; }
    value_type add(value_type a, value_type b) const noexcept { return a + b >= q_ ? a + b - q_ : a + b; }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    value_type mul(value_type a, value_type b) const noexcept { return mod_mul(a, b, q_); }
    value_type inv(value_type a) const;
    bool operator==(const ResidueRing& o) const noexcept { return q_ == o.q_; }

private:
    std::uint64_t q_;
};

struct RealRing {
    using value_type = double;
    static constexpr const char* kName = "real";

    value_type zero() const noexcept { return 0.0; }
    value_type one() const noexcept { return 1.0; }
    value_type from_int(std::int64_t v) const noexcept { return static_cast<double>(v); }
    bool is_zero(value_type a) const noexcept { return a == 0.0; }
    value_type neg(value_type a) const noexcept { return -a; }
    value_type add(value_type a, value_type b) const noexcept { return a + b; }
    value_type sub(value_type a, value_type b) const noexcept { return a - b; }
    value_type mul(value_type a, value_type b) const noexcept { return a * b; }
    bool operator==(const RealRing&) const noexcept { return true; }
};

/// Sparse multivariate polynomial in n variables: exponent vector -> coefficient.
/// Zero coefficients are never stored.
template <class Ring>
class MultiPoly {
public:
    using Coeff = typename Ring::value_type;
    using TermMap = std::map<Monomial, Coeff>;

    explicit MultiPoly(std::size_t n = 0, Ring ring = {}) : n_(n), ring_(std::move(ring)) {}

    static MultiPoly constant(std::size_t n, Coeff c, Ring ring = {}) {
        MultiPoly p(n, std::move(ring));
        p.add_term(Monomial(n), c);
        return p;
    }
    /// The variable x_{i+1} (0-based index i).
    static MultiPoly variable(std::size_t n, std::size_t i, Ring ring = {}) {
        MultiPoly p(n, std::move(ring));
        p.add_term(Monomial::unit(n, i), p.ring_.one());
        return p;
    }
    static MultiPoly monomial(const Monomial& m, Coeff c, Ring ring = {}) {
        MultiPoly p(m.dim(), std::move(ring));
        p.add_term(m, c);
        return p;
    }

    std::size_t dim() const noexcept { return n_; }
    const Ring& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    /// Total degree; 0 for the zero polynomial.
    std::uint32_t degree() const noexcept {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    std::uint32_t degree_in(std::size_t var) const noexcept {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exps[var]);
        return d;
    }
    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        const auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Coeff coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    /// Lexicographically largest term. Precondition: nonzero.
    const std::pair<const Monomial, Coeff>& leading() const { return *terms_.rbegin(); }

    void add_term(const Monomial& m, Coeff c) {
        if (m.dim() != n_) throw DimensionMismatch("monomial dimension does not match polynomial");
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, ring_.neg(c));
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly out(n_, ring_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, ring_.neg(c));
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly out(a.n_, a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.ring_.mul(ca, cb));
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(Coeff c) const {
        MultiPoly out(n_, ring_);
        for (const auto& [m, v] : terms_) out.add_term(m, ring_.mul(v, c));
        return out;
    }

    MultiPoly pow(std::uint64_t e) const {
        MultiPoly result = constant(n_, ring_.one(), ring_);
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Partial derivative with respect to variable `var` (0-based).
    MultiPoly derivative(std::size_t var) const {
        MultiPoly out(n_, ring_);
        for (const auto& [m, c] : terms_) {
            if (m.exps[var] == 0) continue;
            Monomial d = m;
            --d.exps[var];
            out.add_term(d, ring_.mul(c, ring_.from_int(m.exps[var])));
        }
        return out;
    }

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && ring_ == o.ring_ && terms_ == o.terms_; }

private:
    void check_compatible(const MultiPoly& o) const {
        if (n_ != o.n_) throw DimensionMismatch("polynomial dimensions differ");
        if (!(ring_ == o.ring_)) throw DimensionMismatch("polynomial coefficient rings differ");
    }

    std::size_t n_;
    Ring ring_;
    TermMap terms_;
};

using IntPoly = MultiPoly<IntegerRing>;
using FieldPoly = MultiPoly<ResidueRing>;
using RealPoly = MultiPoly<RealRing>;

/// p(images[0], ..., images[n-1]); the result lives in the images' space.
template <class Ring>
MultiPoly<Ring> substitute(const MultiPoly<Ring>& p, std::span<const MultiPoly<Ring>> images) {
    if (images.size() != p.dim()) throw DimensionMismatch("substitute: need one image per variable");
    if (images.empty()) return p;
    const std::size_t m = images.front().dim();
    const Ring& ring = p.ring();
    std::vector<std::vector<MultiPoly<Ring>>> powers(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        powers[i].push_back(MultiPoly<Ring>::constant(m, ring.one(), ring));
        const std::uint32_t top = p.degree_in(i);
        for (std::uint32_t k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    MultiPoly<Ring> out(m, ring);
    for (const auto& [mono, c] : p.terms()) {
        MultiPoly<Ring> term = MultiPoly<Ring>::constant(m, c, ring);
        for (std::size_t i = 0; i < p.dim(); ++i)
            if (mono.exps[i]) term *= powers[i][mono.exps[i]];
        out += term;
    }
    return out;
}

/// p(X + shift), expanded exactly.
template <class Ring>
MultiPoly<Ring> shift(const MultiPoly<Ring>& p, std::span<const std::int64_t> offset) {
    if (offset.size() != p.dim()) throw DimensionMismatch("shift: offset dimension");
    std::vector<MultiPoly<Ring>> images;
    images.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        images.push_back(MultiPoly<Ring>::variable(p.dim(), i, p.ring()) +
                         MultiPoly<Ring>::constant(p.dim(), p.ring().from_int(offset[i]), p.ring()));
    return substitute<Ring>(p, images);
}

/// Copy of p viewed in `m >= dim` variables (new variables appended).
template <class Ring>
MultiPoly<Ring> embed(const MultiPoly<Ring>& p, std::size_t m) {
    if (m < p.dim()) throw DimensionMismatch("embed: target dimension too small");
    MultiPoly<Ring> out(m, p.ring());
    for (const auto& [mono, c] : p.terms()) {
        Monomial e(m);
        std::copy(mono.exps.begin(), mono.exps.end(), e.exps.begin());
        out.add_term(e, c);
    }
    return out;
}

/// Coefficients reduced mod q.
FieldPoly reduce_mod(const IntPoly& p, std::uint64_t q);
RealPoly to_real(const IntPoly& p);

/// Exact value of an integer polynomial at an integer point (overflow-checked).
std::int64_t evaluate(const IntPoly& p, std::span<const std::int64_t> x);
/// Value of a residue polynomial at a point, reduced mod q.
Residue evaluate(const FieldPoly& p, std::span<const std::int64_t> x);
/// Value of a real polynomial; see evaluate_mod1 for phases.
double evaluate(const RealPoly& p, std::span<const std::int64_t> x);
/// Fractional part of p(x), reducing each term mod 1 before summing.
long double evaluate_mod1(const RealPoly& p, std::span<const std::int64_t> x);

/// Canonical text: descending lexicographic terms, explicit coefficients,
/// '*' separators and '^' powers, e.g. "1*x1^2*x2 + 3*x2^3". Zero prints "0".
std::string to_string(const IntPoly& p);
std::string to_string(const FieldPoly& p);
std::string to_string(const RealPoly& p);

/// Parsers for the polynomial grammar
///   poly   := [sign] term (sign term)*
///   term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
///   factor := 'x' index ['^' exponent]
/// with whitespace ignored. Throws ParseError (with byte offset) and
/// VariableOutOfRange. Decimal coefficients are accepted only by parse_real_poly.
IntPoly parse_int_poly(std::string_view text, std::size_t n);
FieldPoly parse_field_poly(std::string_view text, std::size_t n, std::uint64_t q);
RealPoly parse_real_poly(std::string_view text, std::size_t n);

/// Largest variable index referenced in `text` (0 when none); used to infer n.
std::size_t max_variable_index(std::string_view text);

}  // namespace burgess
