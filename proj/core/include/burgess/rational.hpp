#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace burgess {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "5", "-3/4", "0.02", "1e-3" and "2.5E+2"; decimals are read
/// exactly ("0.02" == 1/50). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "5/12", or "3" for integers.
std::string to_fraction_string(const Rational& x);
/// Shortest round-trip decimal of the nearest double.
std::string to_decimal_string(const Rational& x);
double to_double(const Rational& x);

/// Floor of a rational as a BigInt.
BigInt floor(const Rational& x);
/// Nearest integer, halves rounded up.
BigInt round_half_up(const Rational& x);

}  // namespace burgess
