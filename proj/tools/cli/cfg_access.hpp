#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burgess/rational.hpp"
#include "cli/json_io.hpp"
#include "cli/params.hpp"

namespace burgess::cli {

// Typed access to resolved config entries; missing required values are
// usage errors.

inline const Json& required(const Json& cfg, const std::string& key) {
    if (!cfg.contains(key) || cfg.at(key).is_null()) throw UsageError("missing required parameter --" + key);
    return cfg.at(key);
}

inline std::int64_t get_int(const Json& cfg, const std::string& key) { return required(cfg, key).get<std::int64_t>(); }

inline std::int64_t get_positive(const Json& cfg, const std::string& key) {
    const auto v = get_int(cfg, key);
    if (v < 1) throw UsageError("--" + key + " must be positive");
    return v;
}

inline std::optional<std::int64_t> get_opt_int(const Json& cfg, const std::string& key) {
    if (!cfg.contains(key) || cfg.at(key).is_null()) return std::nullopt;
    return cfg.at(key).get<std::int64_t>();
}

inline double get_real(const Json& cfg, const std::string& key) { return required(cfg, key).get<double>(); }

inline std::string get_text(const Json& cfg, const std::string& key) { return required(cfg, key).get<std::string>(); }

inline Rational get_rational(const Json& cfg, const std::string& key) {
    return parse_rational(required(cfg, key).get<std::string>());
}

inline std::vector<std::int64_t> get_int_list(const Json& cfg, const std::string& key) {
    return required(cfg, key).get<std::vector<std::int64_t>>();
}

inline bool get_flag(const Json& cfg, const std::string& key) { return cfg.value(key, false); }

}  // namespace burgess::cli
