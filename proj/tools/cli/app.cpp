#include "cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>

#include "burgess/errors.hpp"
#include "cli/cache.hpp"
#include "cli/commands.hpp"

namespace burgess::cli {

namespace {

constexpr const char* kVersion = "0.1.0";
// Work is always cut into this many slices so results do not depend on
// --threads.
constexpr unsigned kPartitions = 8;

std::vector<CommandDef> all_commands() {
    std::vector<CommandDef> out;
    register_algebra_commands(out);
    register_count_commands(out);
    register_sum_commands(out);
    register_calc_commands(out);
    return out;
}

struct Bound {
    const CommandDef* def;
    CLI::App* app;
    std::unique_ptr<ParamSet> params;
};

Json read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
}

}  // namespace

std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computational laboratory for Burgess-type bounds on mixed character sums", "burgess"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    bool as_json = false, as_csv = false, timing = false;
    unsigned threads = 1;
    std::string cache_dir, config_path;
    app.add_flag("--json", as_json, "Print the full result record as JSON");
    app.add_flag("--csv", as_csv, "Print CSV rows");
    app.add_option("--threads", threads, "Worker threads (results do not depend on it)")->check(CLI::Range(1u, 256u));
    app.add_option("--cache", cache_dir, "Result cache directory (default: $BURGESS_CACHE_DIR)");
    app.add_option("--config", config_path, "JSON file with parameter values; flags take precedence");
    app.add_flag("--timing", timing, "Report wall-clock time (output then varies between runs)");

    const auto defs = all_commands();
    std::map<std::string, CLI::App*> parents;
    std::vector<Bound> bound;
    for (const auto& def : defs) {
        CLI::App* host = &app;
        std::string leaf = def.name;
        if (const auto sp = def.name.find(' '); sp != std::string::npos) {
            const std::string parent = def.name.substr(0, sp);
            leaf = def.name.substr(sp + 1);
            auto it = parents.find(parent);
            if (it == parents.end()) {
                CLI::App* p = app.add_subcommand(parent, "Check an identity or inequality numerically");
                p->require_subcommand(1);
                p->fallthrough();
                it = parents.emplace(parent, p).first;
            }
            host = it->second;
        }
        CLI::App* sub = host->add_subcommand(leaf, def.help);
        sub->fallthrough();
        auto params = std::make_unique<ParamSet>(sub);
        def.declare(*params);
        bound.push_back({&def, sub, std::move(params)});
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (as_json && as_csv) {
        err << "error: --json and --csv are exclusive\n";
        return kExitUsage;
    }

    const Bound* chosen = nullptr;
    for (const auto& b : bound)
        if (b.app->parsed()) chosen = &b;
    if (!chosen) {
        err << "error: no command given\n";
        return kExitUsage;
    }
    const CommandDef& def = *chosen->def;

    try {
        const Json file = config_path.empty() ? Json() : read_config(config_path);
        Json cfg = chosen->params->resolve(file);
        def.normalize(cfg);

        if (cache_dir.empty())
            if (const char* env = std::getenv("BURGESS_CACHE_DIR")) cache_dir = env;
        std::optional<ResultCache> cache;
        if (!cache_dir.empty()) cache.emplace(cache_dir);

        const auto start = std::chrono::steady_clock::now();
        Json record;
        bool replayed = false;
        std::vector<double> row_seconds;
        if (cache) {
            if (auto hit = cache->load(def.name, cfg)) {
                record = std::move(*hit);
                replayed = true;
            }
        }
        if (!replayed) {
            RunContext ctx;
            ctx.policy = {threads, kPartitions};
            Outcome o = def.run(cfg, ctx);
            record = Json{{"command", def.name},
                          {"version", kVersion},
                          {"config", cfg},
                          {"result", std::move(o.result)},
                          {"exit_code", o.exit_code}};
            row_seconds = std::move(o.row_seconds);
            if (cache) cache->store(def.name, cfg, record);
        }
        if (timing) {
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (replayed) row_seconds.clear();
            Json rows = Json::array();
            for (double s : row_seconds) rows.push_back(s);
            record["timing"] = Json{{"seconds", seconds}, {"cached", replayed}, {"rows", rows}};
        }

        if (as_json) out << record.dump(2) << "\n";
        else if (as_csv) out << def.csv(record);
        else out << def.text(record);
        return record.at("exit_code").get<int>();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DegreeTooLarge& e) {
        err << "indeterminate: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace burgess::cli
