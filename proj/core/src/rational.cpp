#include "burgess/rational.hpp"

#include <charconv>
#include <cctype>

#include "burgess/errors.hpp"

namespace burgess {

namespace {

BigInt pow10(unsigned e) {
    BigInt out = 1;
    for (unsigned i = 0; i < e; ++i) out *= 10;
    return out;
}

BigInt parse_digits(std::string_view s, std::size_t base_offset) {
    if (s.empty()) throw ParseError("expected digits", base_offset);
    BigInt out = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("unexpected character", base_offset + i);
        out = out * 10 + (s[i] - '0');
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t begin = 0;
    while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    std::size_t end = text.size();
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view s = text.substr(begin, end - begin);
    if (s.empty()) throw ParseError("empty number", begin);

    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    Rational value;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_digits(s.substr(pos, slash - pos), begin + pos);
        const BigInt den = parse_digits(s.substr(slash + 1), begin + slash + 1);
        if (den == 0) throw ParseError("zero denominator", begin + slash + 1);
        value = Rational(num, den);
    } else {
        std::string_view mantissa = s.substr(pos);
        long exponent = 0;
        if (const auto e = mantissa.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = mantissa.substr(e + 1);
            const std::size_t exp_offset = begin + pos + e + 1;
            if (!exp_text.empty() && exp_text[0] == '+') exp_text.remove_prefix(1);
            const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
            if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty())
                throw ParseError("bad exponent", exp_offset);
            if (exponent > 4000 || exponent < -4000) throw ParseError("exponent out of range", exp_offset);
            mantissa = mantissa.substr(0, e);
        }
        const auto dot = mantissa.find('.');
        std::string_view int_part = mantissa.substr(0, dot);
        std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : mantissa.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) throw ParseError("expected digits", begin + pos);
        const BigInt ip = int_part.empty() ? BigInt(0) : parse_digits(int_part, begin + pos);
        const BigInt fp = frac_part.empty() ? BigInt(0) : parse_digits(frac_part, begin + pos + dot + 1);
        value = Rational(ip) + Rational(fp, pow10(static_cast<unsigned>(frac_part.size())));
        if (exponent > 0) value *= Rational(pow10(static_cast<unsigned>(exponent)));
        if (exponent < 0) value /= Rational(pow10(static_cast<unsigned>(-exponent)));
    }
    return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_decimal_string(const Rational& x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, to_double(x));
    return std::string(buf, ptr);
}

BigInt floor(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

BigInt round_half_up(const Rational& x) { return floor(x + Rational(1, 2)); }

}  // namespace burgess
