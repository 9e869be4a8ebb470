#include "cli/params.hpp"

#include <set>

#include "burgess/rational.hpp"

namespace burgess::cli {

ParamSet& ParamSet::add(const std::string& key, const std::string& flags, ParamKind kind, Json def,
                        const std::string& help, int nargs) {
    Entry& e = entries_.emplace_back();
    e.key = key;
    e.kind = kind;
    e.def = std::move(def);
    e.nargs = nargs;
    if (kind == ParamKind::flag) {
        e.option = app_->add_flag(flags, e.flag, help);
    } else {
        e.option = app_->add_option(flags, e.raw, help);
        if (nargs > 1) e.option->expected(nargs);
        else if (kind == ParamKind::int_list || kind == ParamKind::text_list)
            e.option->expected(1, CLI::detail::expected_max_vector_size);
        else e.option->expected(1)->allow_extra_args(false);  // keep "[[1,2],[3,4]]" whole
        if (!e.def.is_null()) e.option->default_str(cell(e.def));
    }
    return *this;
}

namespace {

std::int64_t to_integer(const std::string& key, const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("--" + key + ": expected an integer, got '" + s + "'");
    }
}

double to_real(const std::string& key, const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("--" + key + ": expected a number, got '" + s + "'");
    }
}

}  // namespace

Json ParamSet::convert(const Entry& e, const Json& value) const {
    if (value.is_null()) return value;
    switch (e.kind) {
        case ParamKind::flag:
            if (!value.is_boolean()) throw UsageError(e.key + ": expected true or false");
            return value;
        case ParamKind::integer:
            if (value.is_number_integer()) return value;
            if (value.is_string()) return to_integer(e.key, value.get<std::string>());
            throw UsageError(e.key + ": expected an integer");
        case ParamKind::real:
            if (value.is_number()) return value.get<double>();
            if (value.is_string()) return to_real(e.key, value.get<std::string>());
            throw UsageError(e.key + ": expected a number");
        case ParamKind::rational: {
            std::string text = value.is_string() ? value.get<std::string>() : value.dump();
            try {
                return to_fraction_string(parse_rational(text));
            } catch (const std::exception&) {
                throw UsageError(e.key + ": expected a rational number, got '" + text + "'");
            }
        }
        case ParamKind::text:
            if (value.is_string()) return value;
            if (value.is_number_integer()) return value.dump();
            if (value.is_array()) {
                std::string joined;
                for (const auto& v : value) joined += (joined.empty() ? "" : " ") + cell(v);
                return joined;
            }
            throw UsageError(e.key + ": expected text");
        case ParamKind::text_list: {
            Json out = Json::array();
            if (value.is_string()) out.push_back(value);
            else if (value.is_array()) {
                for (const auto& v : value) {
                    if (!v.is_string()) throw UsageError(e.key + ": expected strings");
                    out.push_back(v);
                }
            } else {
                throw UsageError(e.key + ": expected a string list");
            }
            return out;
        }
        case ParamKind::int_list: {
            Json out = Json::array();
            auto push_text = [&](const std::string& s) {
                try {
                    for (auto v : parse_int_list(s)) out.push_back(v);
                } catch (const std::exception&) {
                    throw UsageError(e.key + ": expected a comma-separated integer list, got '" + s + "'");
                }
            };
            if (value.is_number_integer()) out.push_back(value);
            else if (value.is_string()) push_text(value.get<std::string>());
            else if (value.is_array()) {
                for (const auto& v : value) {
                    if (v.is_number_integer()) out.push_back(v);
                    else if (v.is_string()) push_text(v.get<std::string>());
                    else throw UsageError(e.key + ": expected integers");
                }
            } else {
                throw UsageError(e.key + ": expected an integer list");
            }
            return out;
        }
    }
    return value;
}

Json ParamSet::from_raw(const Entry& e) const {
    if (e.kind == ParamKind::flag) return e.flag;
    if (e.kind == ParamKind::int_list || e.kind == ParamKind::text_list) return convert(e, Json(e.raw));
    if (e.nargs > 1) {
        std::string joined;
        for (const auto& s : e.raw) joined += (joined.empty() ? "" : " ") + s;
        return convert(e, joined);
    }
    return convert(e, e.raw.back());
}

Json ParamSet::resolve(const Json& file) const {
    if (!file.is_null() && !file.is_object()) throw UsageError("config file must hold a JSON object");
    std::set<std::string> known{"command"};
    Json cfg = Json::object();
    for (const auto& e : entries_) {
        known.insert(e.key);
        Json v = e.def;
        if (file.is_object() && file.contains(e.key)) v = convert(e, file.at(e.key));
        if (e.option->count() > 0) v = from_raw(e);
        cfg[e.key] = v;
    }
    if (file.is_object())
        for (const auto& [k, v] : file.items())
            if (!known.count(k)) throw UsageError("config file: unknown key '" + k + "'");
    return cfg;
}

void merge_system_keys(Json& cfg, const std::string& fallback) {
    std::vector<std::string> given;
    std::string descriptor;
    for (const char* key : {"standard", "ack", "custom"}) {
        if (!cfg.contains(key)) continue;
        if (!cfg[key].is_null()) {
            given.push_back(key);
            descriptor = std::string(key) + " " + cfg[key].get<std::string>();
        }
        cfg.erase(key);
    }
    if (cfg.contains("system") && !cfg["system"].is_null()) {
        given.push_back("system");
        descriptor = cfg["system"].get<std::string>();
    }
    if (given.size() > 1) throw UsageError("give only one of --system, --standard, --ack, --custom");
    if (given.empty()) {
        if (fallback.empty()) throw UsageError("a monomial system is required (--standard n d, --ack caps k, --custom ...)");
        descriptor = fallback;
    }
    cfg["system"] = descriptor;
}

}  // namespace burgess::cli
