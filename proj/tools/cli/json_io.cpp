#include "cli/json_io.hpp"

#include <charconv>
#include <sstream>

#include "burgess/errors.hpp"

namespace burgess::cli {

Json rational_json(const Rational& x) {
    return Json{{"fraction", to_fraction_string(x)}, {"decimal", to_double(x)}};
}

Json bigint_json(const BigInt& x) {
    if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return Json(x.convert_to<std::uint64_t>());
    if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return Json(x.convert_to<std::int64_t>());
    return Json(x.str());
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json collection_json(const Collection& c) {
    Json out = Json::array();
    for (const auto& p : c.points) out.push_back(p);
    return out;
}

Collection parse_collection(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("collection: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    if (!j.is_array()) throw ParseError("collection must be an array of points", 0);
    Collection c;
    for (const auto& p : j) {
        if (!p.is_array()) throw ParseError("collection point must be an array of integers", 0);
        Point pt;
        for (const auto& v : p) {
            if (!v.is_number_integer()) throw ParseError("collection coordinates must be integers", 0);
            pt.push_back(v.get<std::int64_t>());
        }
        c.points.push_back(std::move(pt));
    }
    return c;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty list item", pos);
        item = item.substr(b, e - b + 1);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) throw ParseError("expected an integer", pos + b);
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_long_double(long double v) {
    // Long doubles are reported at double precision for stable output.
    return format_double(static_cast<double>(v));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "";
    if (v.is_object() && v.contains("fraction")) return v["fraction"].get<std::string>();
    return v.dump();
}

}  // namespace burgess::cli
