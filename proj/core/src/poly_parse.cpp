#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>

#include "burgess/polynomial.hpp"

namespace burgess {

namespace {

struct RawTerm {
    bool negative = false;
    std::string coeff;  // digits, possibly with one '.'; empty means 1
    bool decimal = false;
    std::size_t coeff_offset = 0;
    Monomial mono;
};

/// Recursive-descent tokenizer for the polynomial grammar. Produces raw terms;
/// coefficient interpretation is left to the ring-specific front ends.
class Parser {
public:
    Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

    std::vector<RawTerm> run() {
        std::vector<RawTerm> out;
        skip_ws();
        if (eof()) throw ParseError("empty polynomial", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
            skip_ws();
        }
        out.push_back(term(negative));
        for (;;) {
            skip_ws();
            if (eof()) break;
            const char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_);
            get();
            skip_ws();
            out.push_back(term(c == '-'));
        }
        return out;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    RawTerm term(bool negative) {
        RawTerm t;
        t.negative = negative;
        t.mono = Monomial(n_);
        if (eof()) throw ParseError("expected a term", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            t.coeff_offset = pos_;
            while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
                if (peek() == '.') {
                    if (t.decimal) throw ParseError("malformed number", pos_);
                    t.decimal = true;
                }
                t.coeff += get();
            }
            if (t.coeff == ".") throw ParseError("malformed number", t.coeff_offset);
            skip_ws();
            if (eof() || peek() != '*') return t;
            get();
            skip_ws();
        }
        factor(t.mono);
        for (;;) {
            skip_ws();
            if (eof() || peek() != '*') break;
            get();
            skip_ws();
            factor(t.mono);
        }
        return t;
    }

    void factor(Monomial& mono) {
        if (eof() || peek() != 'x') throw ParseError("expected variable x<i>", pos_);
        const std::size_t at = pos_;
        get();
        const auto index = integer("variable index");
        if (index == 0 || index > n_)
            throw VariableOutOfRange("variable x" + std::to_string(index) + " out of range 1.." + std::to_string(n_) +
                                     " at byte " + std::to_string(at));
        std::uint64_t e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            get();
            skip_ws();
            e = integer("exponent");
        }
        mono.exps[index - 1] += static_cast<std::uint32_t>(e);
    }

    std::uint64_t integer(const char* what) {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (res.ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " too large", start);
        if (res.ec != std::errc() || res.ptr == s_.data() + pos_) throw ParseError(std::string("expected ") + what, start);
        pos_ = static_cast<std::size_t>(res.ptr - s_.data());
        if (v > 1'000'000) throw ParseError(std::string(what) + " too large", start);
        return v;
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_int_poly(std::string_view text, std::size_t n) {
    IntPoly out(n);
    const IntegerRing ring;
    for (const auto& t : Parser(text, n).run()) {
        std::int64_t c = 1;
        if (!t.coeff.empty()) {
            if (t.decimal) throw ParseError("decimal coefficient in integer polynomial", t.coeff_offset);
            auto res = std::from_chars(t.coeff.data(), t.coeff.data() + t.coeff.size(), c);
            if (res.ec != std::errc()) throw ParseError("integer coefficient out of range", t.coeff_offset);
        }
        out.add_term(t.mono, t.negative ? ring.neg(c) : c);
    }
    return out;
}

FieldPoly parse_field_poly(std::string_view text, std::size_t n, std::uint64_t q) {
    const ResidueRing ring(q);
    FieldPoly out(n, ring);
    for (const auto& t : Parser(text, n).run()) {
        if (t.decimal) throw ParseError("decimal coefficient in residue polynomial", t.coeff_offset);
        std::uint64_t c = t.coeff.empty() ? 1 % q : 0;
        for (char ch : t.coeff) c = ring.add(ring.mul(c, 10 % q), static_cast<std::uint64_t>(ch - '0') % q);
        out.add_term(t.mono, t.negative ? ring.neg(c) : c);
    }
    return out;
}

RealPoly parse_real_poly(std::string_view text, std::size_t n) {
    RealPoly out(n);
    for (const auto& t : Parser(text, n).run()) {
        double c = 1.0;
        if (!t.coeff.empty()) {
            auto res = std::from_chars(t.coeff.data(), t.coeff.data() + t.coeff.size(), c);
            if (res.ec != std::errc()) throw ParseError("malformed real coefficient", t.coeff_offset);
        }
        out.add_term(t.mono, t.negative ? -c : c);
    }
    return out;
}

std::size_t max_variable_index(std::string_view text) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        std::size_t v = 0;
        auto res = std::from_chars(text.data() + i + 1, text.data() + text.size(), v);
        if (res.ec == std::errc()) best = std::max(best, v);
    }
    return best;
}

}  // namespace burgess
