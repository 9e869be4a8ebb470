#pragma once

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/json_io.hpp"

namespace burgess::cli {

/// Invalid command-line or config input (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParamKind { integer, real, rational, text, flag, int_list, text_list };

/// Parameters of one command. Each parameter is a CLI flag and a config key;
/// resolve() layers defaults, then the config file, then explicit flags.
class ParamSet {
public:
    explicit ParamSet(CLI::App* app) : app_(app) {}

    /// `flags` uses CLI11 syntax ("-q,--modulus"); `nargs` > 1 collects that
    /// many values joined by spaces (e.g. "--standard 2 2").
    ParamSet& add(const std::string& key, const std::string& flags, ParamKind kind, Json def,
                  const std::string& help, int nargs = 1);

    /// Config object with one entry per parameter, in declaration order.
    /// Throws UsageError on unknown keys or malformed values.
    Json resolve(const Json& file) const;

private:
    struct Entry {
        std::string key;
        ParamKind kind;
        Json def;
        CLI::Option* option = nullptr;
        std::vector<std::string> raw;
        bool flag = false;
        int nargs = 1;
    };
    Json convert(const Entry& e, const Json& value) const;
    Json from_raw(const Entry& e) const;

    CLI::App* app_;
    std::deque<Entry> entries_;
};

/// Replaces the system shortcuts (standard, ack, custom) with one
/// "system" descriptor string; at most one may be given.
void merge_system_keys(Json& cfg, const std::string& fallback = "");

}  // namespace burgess::cli
