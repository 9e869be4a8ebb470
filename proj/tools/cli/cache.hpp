#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cli/json_io.hpp"

namespace burgess::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

/// Directory of result records keyed by a digest of (command, config).
/// A hit is accepted only when the stored command and config match exactly.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::string digest(const std::string& command, const Json& config);

    std::optional<Json> load(const std::string& command, const Json& config) const;
    /// Writes atomically (temporary file, then rename).
    void store(const std::string& command, const Json& config, const Json& record) const;

private:
    std::filesystem::path path_for(const std::string& command, const Json& config) const;
    std::filesystem::path dir_;
};

}  // namespace burgess::cli
