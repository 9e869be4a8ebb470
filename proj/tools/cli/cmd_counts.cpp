#include <chrono>
#include <cmath>
#include <set>

#include "burgess/vinogradov.hpp"
#include "cli/cfg_access.hpp"
#include "cli/commands.hpp"

namespace burgess::cli {

namespace {

std::optional<std::vector<Rational>> parse_k_values(const Json& cfg) {
    if (!cfg.contains("k_values") || cfg["k_values"].is_null()) return std::nullopt;
    std::vector<Rational> out;
    const std::string text = cfg["k_values"].get<std::string>();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        out.push_back(parse_rational(text.substr(pos, end - pos)));
        pos = end + 1;
    }
    return out;
}

Json predicted_json(const PredictedExponent& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms) terms.push_back(to_fraction_string(t));
    Json ks = Json::array();
    for (const auto& k : p.k_values) ks.push_back(to_fraction_string(k));
    return Json{{"exponent", rational_json(p.exponent)},
                {"j_star", p.j_star},
                {"terms", terms},
                {"k_values", ks},
                {"large_r_regime", p.large_r_regime}};
}

void add_system_params(ParamSet& p) {
    p.add("standard", "--standard", ParamKind::text, nullptr, "Standard system: n d", 2)
        .add("ack", "--ack", ParamKind::text, nullptr, "ACK system: caps k", 2)
        .add("custom", "--custom", ParamKind::text, nullptr, "Custom exponent set, e.g. \"1,0;0,1\"")
        .add("system", "--system", ParamKind::text, nullptr, "System descriptor");
}

// --- jr ---------------------------------------------------------------------------

void jr_declare(ParamSet& p) {
    add_system_params(p);
    p.add("r", "-r", ParamKind::integer, nullptr, "Half-length r")
        .add("x", "-X", ParamKind::int_list, nullptr, "Side X (comma-separated or repeated)")
        .add("method", "--method", ParamKind::text, "mitm", "mitm, bruteforce or both")
        .add("k_values", "--k-values", ParamKind::text, nullptr, "K_1..K_n for the prediction (ACK systems)")
        .add("budget", "--budget", ParamKind::integer, 1'000'000'000, "Maximum enumeration size");
}

void jr_normalize(Json& cfg) {
    merge_system_keys(cfg);
    parse_system(cfg["system"].get<std::string>());
    get_positive(cfg, "r");
    for (auto x : get_int_list(cfg, "x"))
        if (x < 1) throw UsageError("-X values must be positive");
    const std::string m = get_text(cfg, "method");
    if (m != "mitm" && m != "bruteforce" && m != "both") throw UsageError("--method must be mitm, bruteforce or both");
    get_positive(cfg, "budget");
}

Outcome jr_run(const Json& cfg, const RunContext& ctx) {
    const MonomialSystem sys = parse_system(get_text(cfg, "system"));
    const auto r = static_cast<std::size_t>(get_int(cfg, "r"));
    const Budget budget{static_cast<std::uint64_t>(get_int(cfg, "budget"))};
    const std::string m = get_text(cfg, "method");
    std::vector<CountMethod> methods;
    if (m != "bruteforce") methods.push_back(CountMethod::mitm);
    if (m != "mitm") methods.push_back(CountMethod::bruteforce);

    Outcome out;
    Json rows = Json::array();
    bool agree = true;
    std::vector<std::pair<double, double>> points;
    for (auto xv : get_int_list(cfg, "x")) {
        const auto x = static_cast<std::uint64_t>(xv);
        std::optional<BigInt> first;
        for (auto method : methods) {
            const CountResult c = count_jr(sys, r, x, method, budget, ctx.policy);
            rows.push_back(Json{{"system", c.system}, {"r", r}, {"X", x}, {"J", bigint_json(c.j)},
                                {"method", to_string(method)}});
            out.row_seconds.push_back(c.seconds);
            if (!first) {
                first = c.j;
                points.emplace_back(std::log(static_cast<double>(x)), std::log(c.j.convert_to<double>()));
            } else if (*first != c.j) {
                agree = false;
            }
        }
    }
    Json res{{"rows", rows}};
    if (methods.size() > 1) res["methods_agree"] = agree;
    try {
        res["predicted"] = predicted_json(predicted_exponent(sys, r, parse_k_values(cfg)));
    } catch (const UnsupportedSystem& e) {
        res["predicted"] = Json{{"unsupported", e.what()}};
    }
    std::set<double> distinct;
    for (const auto& [lx, ly] : points) distinct.insert(lx);
    if (distinct.size() >= 3) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [lx, ly] : points) {
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        const double k = static_cast<double>(points.size());
        res["slope"] = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    out.result = res;
    out.exit_code = agree ? kExitOk : kExitNegative;
    return out;
}

std::string jr_csv(const Json& rec) {
    const bool timed = rec.contains("timing");
    std::vector<std::string> header{"system", "r", "X", "J", "method"};
    if (timed) header.push_back("seconds");
    std::string out = csv_row(header);
    const Json& rows = rec["result"]["rows"];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = rows[i];
        std::vector<std::string> f{cell(row["system"]), cell(row["r"]), cell(row["X"]), cell(row["J"]),
                                   cell(row["method"])};
        if (timed) {
            const Json& t = rec["timing"]["rows"];
            f.push_back(i < t.size() ? format_double(t[i].get<double>()) : "0");
        }
        out += csv_row(f);
    }
    return out;
}

std::string jr_text(const Json& rec) {
    const Json& res = rec["result"];
    std::string out;
    for (const auto& row : res["rows"])
        out += "J_" + cell(row["r"]) + "(" + cell(row["system"]) + ", X=" + cell(row["X"]) + ") = " + cell(row["J"]) +
               "  [" + cell(row["method"]) + "]\n";
    if (res.contains("methods_agree")) out += std::string("methods agree: ") + cell(res["methods_agree"]) + "\n";
    const Json& p = res["predicted"];
    if (p.contains("exponent"))
        out += "predicted exponent: " + cell(p["exponent"]) + " (dominant term j* = " + cell(p["j_star"]) + ")\n";
    else
        out += "predicted exponent: unavailable (" + cell(p["unsupported"]) + ")\n";
    if (res.contains("slope")) out += "fitted log-log slope: " + cell(res["slope"]) + "\n";
    if (rec.contains("timing")) out += "seconds: " + cell(rec["timing"]["seconds"]) + "\n";
    return out;
}

// --- vr ---------------------------------------------------------------------------

void vr_declare(ParamSet& p) {
    add_system_params(p);
    p.add("r", "-r", ParamKind::integer, nullptr, "Half-length r")
        .add("sides", "-k,--sides", ParamKind::int_list, nullptr, "Box sides k_1..k_n")
        .add("budget", "--budget", ParamKind::integer, 1'000'000'000, "Maximum enumeration size");
}

void vr_normalize(Json& cfg) {
    merge_system_keys(cfg);
    const auto sys = parse_system(cfg["system"].get<std::string>());
    get_positive(cfg, "r");
    if (get_int_list(cfg, "sides").size() != sys.dim()) throw UsageError("--sides needs one value per variable");
    get_positive(cfg, "budget");
}

Outcome vr_run(const Json& cfg, const RunContext& ctx) {
    const MonomialSystem sys = parse_system(get_text(cfg, "system"));
    const auto r = static_cast<std::size_t>(get_int(cfg, "r"));
    const auto sides = get_int_list(cfg, "sides");
    const BigInt count = vr_count(sys, r, sides, Budget{static_cast<std::uint64_t>(get_int(cfg, "budget"))}, ctx.policy);
    return {Json{{"system", sys.descriptor()}, {"r", r}, {"sides", sides}, {"count", bigint_json(count)}}, kExitOk, {}};
}

std::string vr_text(const Json& rec) {
    const Json& r = rec["result"];
    return "|V_r cap box| = " + cell(r["count"]) + "  (" + cell(r["system"]) + ", r=" + cell(r["r"]) +
           ", sides=" + r["sides"].dump() + ")\n";
}

std::string vr_csv(const Json& rec) {
    const Json& r = rec["result"];
    std::string sides;
    for (const auto& s : r["sides"]) sides += (sides.empty() ? "" : " ") + cell(s);
    return csv_row({"system", "r", "sides", "count"}) + csv_row({cell(r["system"]), cell(r["r"]), sides, cell(r["count"])});
}

}  // namespace

void register_count_commands(std::vector<CommandDef>& out) {
    out.push_back({"jr", "Count solutions J_r(G, X) of the Vinogradov system", jr_declare, jr_normalize, jr_run, jr_text,
                   jr_csv});
    out.push_back({"vr", "Count collections in a box on the signed-moment variety", vr_declare, vr_normalize, vr_run,
                   vr_text, vr_csv});
}

}  // namespace burgess::cli
