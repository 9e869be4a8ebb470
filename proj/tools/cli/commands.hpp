#pragma once

#include <string>
#include <vector>

#include "burgess/exec.hpp"
#include "cli/json_io.hpp"
#include "cli/params.hpp"

namespace burgess::cli {

struct RunContext {
    ExecPolicy policy;
};

struct Outcome {
    Json result;
    int exit_code = 0;
    /// Per-row wall times (seconds), reported only with --timing.
    std::vector<double> row_seconds;
};

/// One CLI command. `name` may hold a parent and child ("verify b-sum").
struct CommandDef {
    std::string name;
    std::string help;
    void (*declare)(ParamSet&);
    /// Fills derived defaults and validates; runs before the cache lookup.
    void (*normalize)(Json& cfg);
    Outcome (*run)(const Json& cfg, const RunContext& ctx);
    /// Human-readable and CSV renderings of a full record
    /// {"command", "version", "config", "result", "exit_code"[, "timing"]}.
    std::string (*text)(const Json& record);
    std::string (*csv)(const Json& record);
};

void register_algebra_commands(std::vector<CommandDef>& out);
void register_count_commands(std::vector<CommandDef>& out);
void register_sum_commands(std::vector<CommandDef>& out);
void register_calc_commands(std::vector<CommandDef>& out);

/// Two-column "key  value" table.
std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIndeterminate = 3;
inline constexpr int kExitBudget = 4;

}  // namespace burgess::cli
