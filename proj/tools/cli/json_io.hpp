#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgess/collection.hpp"
#include "burgess/rational.hpp"

namespace burgess::cli {

using Json = nlohmann::ordered_json;

/// {"fraction": "5/12", "decimal": 0.4166666666666667}
Json rational_json(const Rational& x);
/// Number when the value fits 64 bits, decimal string otherwise.
Json bigint_json(const BigInt& x);
Json complex_json(std::complex<double> z);
Json collection_json(const Collection& c);

/// Parses "[[1,1],[2,1]]" (JSON integer arrays).
Collection parse_collection(const std::string& text);
/// Parses "1,2,3" (whitespace allowed).
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// Shortest round-trip text for a double.
std::string format_double(double v);
std::string format_long_double(long double v);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

/// Text for a JSON scalar as used in tables and CSV cells.
std::string cell(const Json& v);

}  // namespace burgess::cli
