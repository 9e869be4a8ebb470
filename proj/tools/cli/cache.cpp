#include "cli/cache.hpp"

#include <fstream>
#include <sstream>

namespace burgess::cli {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string ResultCache::digest(const std::string& command, const Json& config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(command + "\n" + config.dump())));
    return buf;
}

std::filesystem::path ResultCache::path_for(const std::string& command, const Json& config) const {
    std::string stem = command;
    for (auto& c : stem)
        if (c == ' ') c = '-';
    return dir_ / (stem + "-" + digest(command, config) + ".json");
}

std::optional<Json> ResultCache::load(const std::string& command, const Json& config) const {
    std::ifstream in(path_for(command, config));
    if (!in) return std::nullopt;
    try {
        Json rec = Json::parse(in);
        if (rec.value("command", "") != command || rec["config"] != config) return std::nullopt;
        return rec;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& command, const Json& config, const Json& record) const {
    std::filesystem::create_directories(dir_);
    const auto target = path_for(command, config);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << record.dump(2) << "\n";
        if (!out) return;  // the cache is best-effort
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
}

}  // namespace burgess::cli
