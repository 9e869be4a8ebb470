#include <cmath>

#include "burgess/burgess_calc.hpp"
#include "burgess/errors.hpp"
#include "cli/cfg_access.hpp"
#include "cli/commands.hpp"

namespace burgess::cli {

namespace {

Json opt_rational(const std::optional<Rational>& x) { return x ? rational_json(*x) : Json(); }

std::string range_name(RangeRule r) {
    switch (r) {
        case RangeRule::theorem: return "theorem";
        case RangeRule::theta_only: return "theta_only";
        case RangeRule::large_r: return "large_r";
    }
    return "?";
}

ThetaRule theta_rule(const Json& cfg) {
    ThetaRule rule;
    rule.one_dim = get_flag(cfg, "one_dim");
    if (!cfg["alpha"].is_null()) rule.alpha = get_rational(cfg, "alpha");
    return rule;
}

void add_theta_params(ParamSet& p) {
    p.add("alpha", "--alpha", ParamKind::rational, nullptr, "Conjectural rule Theta = floor(r/alpha)")
        .add("one_dim", "--one-dim", ParamKind::flag, false, "Allow n = 1 with Theta = r");
}

// --- exponents ----------------------------------------------------------------

void exponents_declare(ParamSet& p) {
    p.add("n", "-n", ParamKind::integer, nullptr, "Dimension n")
        .add("d", "-d", ParamKind::integer, nullptr, "Degree d")
        .add("r", "-r", ParamKind::integer, nullptr, "r")
        .add("standard", "--standard", ParamKind::text, nullptr, "Standard system: n d", 2)
        .add("ack", "--ack", ParamKind::text, nullptr, "ACK system: caps k", 2)
        .add("custom", "--custom", ParamKind::text, nullptr, "Custom exponent set")
        .add("system", "--system", ParamKind::text, nullptr, "System descriptor (TDI report)");
    add_theta_params(p);
}

void exponents_normalize(Json& cfg) {
    get_positive(cfg, "r");
    const bool nd = !cfg["n"].is_null() || !cfg["d"].is_null();
    const bool sys = !cfg["standard"].is_null() || !cfg["ack"].is_null() || !cfg["custom"].is_null() ||
                     !cfg["system"].is_null();
    if (nd && sys) throw UsageError("give either -n/-d or a system, not both");
    if (sys) {
        merge_system_keys(cfg);
        parse_system(cfg["system"].get<std::string>());
        cfg.erase("n");
        cfg.erase("d");
    } else {
        get_positive(cfg, "n");
        get_positive(cfg, "d");
        cfg.erase("standard");
        cfg.erase("ack");
        cfg.erase("custom");
        cfg.erase("system");
    }
}

Outcome exponents_run(const Json& cfg, const RunContext&) {
    const auto rule = theta_rule(cfg);
    const auto r = get_int(cfg, "r");
    const ExponentReport rep = cfg.contains("system")
                                   ? tdi_theorem_report(parse_system(get_text(cfg, "system")), r, rule)
                                   : exponent_report(get_int(cfg, "n"), get_int(cfg, "d"), r, rule);
    Json res{{"system", rep.system},
             {"n", rep.n},
             {"d", rep.d},
             {"r", rep.r},
             {"theta", rep.theta},
             {"M", rep.weight},
             {"R", rep.rank},
             {"range_rule", range_name(rep.range)},
             {"conjectural", rep.conjectural},
             {"valid", rep.valid},
             {"reasons", rep.reasons},
             {"beta_n", rational_json(rep.beta_n)},
             {"a", rational_json(rep.a)},
             {"b", opt_rational(rep.b)},
             {"h_exponent_cap", opt_rational(rep.h_exponent_cap)},
             {"beta_threshold", opt_rational(rep.beta_threshold)},
             {"epsilon", 0},
             {"note", "bound |S| << H^a q^(b+eps), eps = 0 displayed, implied constant not explicit"}};
    return {res, rep.valid ? kExitOk : kExitNegative, {}};
}

std::string exponents_text(const Json& rec) {
    const Json& r = rec["result"];
    std::string reasons;
    for (const auto& s : r["reasons"]) reasons += (reasons.empty() ? "" : "; ") + s.get<std::string>();
    std::vector<std::pair<std::string, std::string>> rows{
        {"system", cell(r["system"])},
        {"n, d, r", cell(r["n"]) + ", " + cell(r["d"]) + ", " + cell(r["r"])},
        {"Theta", cell(r["theta"])},
        {"M, R", cell(r["M"]) + ", " + cell(r["R"])},
        {"valid", cell(r["valid"]) + (reasons.empty() ? "" : " (" + reasons + ")")},
        {"beta_n", cell(r["beta_n"])},
        {"bound exponent a (H^a)", cell(r["a"])},
        {"bound exponent b (q^b)", cell(r["b"])},
        {"H exponent cap", cell(r["h_exponent_cap"])},
        {"threshold", cell(r["beta_threshold"])}};
    if (r["conjectural"].get<bool>()) rows.emplace_back("mode", "conjectural (alpha)");
    return kv_table(rows);
}

std::string exponents_csv(const Json& rec) {
    const Json& r = rec["result"];
    return csv_row({"system", "n", "d", "r", "theta", "M", "valid", "a", "b", "h_exponent_cap", "threshold"}) +
           csv_row({cell(r["system"]), cell(r["n"]), cell(r["d"]), cell(r["r"]), cell(r["theta"]), cell(r["M"]),
                    cell(r["valid"]), cell(r["a"]), cell(r["b"]), cell(r["h_exponent_cap"]), cell(r["beta_threshold"])});
}

// --- delta -----------------------------------------------------------------------

void delta_declare(ParamSet& p) {
    p.add("n", "-n", ParamKind::integer, nullptr, "Dimension n")
        .add("d", "-d", ParamKind::integer, nullptr, "Degree d")
        .add("kappa", "--kappa", ParamKind::rational, nullptr, "kappa in H = q^(beta_n + kappa)")
        .add("r", "-r", ParamKind::integer, nullptr, "Use this r instead of the rounding rule");
}

void delta_normalize(Json& cfg) {
    get_positive(cfg, "n");
    get_positive(cfg, "d");
    get_rational(cfg, "kappa");
}

Outcome delta_run(const Json& cfg, const RunContext&) {
    const auto rep = delta_savings(get_int(cfg, "n"), get_int(cfg, "d"), get_rational(cfg, "kappa"),
                                   get_opt_int(cfg, "r"));
    Json res{{"n", rep.n},
             {"d", rep.d},
             {"kappa", rational_json(rep.kappa)},
             {"r", rep.r},
             {"r_from_rule", rep.r_from_rule},
             {"theta", rep.theta},
             {"M", rep.weight},
             {"delta", rational_json(rep.delta)},
             {"delta_over_kappa_sq", rational_json(rep.delta_over_kappa_sq)},
             {"asymptotic_ratio", rational_json(rep.asymptotic_ratio)},
             {"continuous_argmax", rep.continuous_argmax},
             {"best_r", rep.best_r},
             {"best_delta", rational_json(rep.best_delta)}};
    return {res, kExitOk, {}};
}

std::string delta_text(const Json& rec) {
    const Json& r = rec["result"];
    return kv_table({{"r*", cell(r["r"]) + (r["r_from_rule"].get<bool>() ? " (rounding rule)" : " (given)")},
                     {"Theta, M", cell(r["theta"]) + ", " + cell(r["M"])},
                     {"delta", cell(r["delta"]) + " ~ " + cell(r["delta"]["decimal"])},
                     {"delta / kappa^2", cell(r["delta_over_kappa_sq"]["decimal"])},
                     {"(n+1)^2 / (4(n-1))", cell(r["asymptotic_ratio"])},
                     {"continuous argmax", cell(r["continuous_argmax"])},
                     {"best integer r", cell(r["best_r"])},
                     {"best delta", cell(r["best_delta"]) + " ~ " + cell(r["best_delta"]["decimal"])}});
}

std::string delta_csv(const Json& rec) {
    const Json& r = rec["result"];
    return csv_row({"n", "d", "kappa", "r", "theta", "delta", "delta_decimal", "best_r", "continuous_argmax"}) +
           csv_row({cell(r["n"]), cell(r["d"]), cell(r["kappa"]), cell(r["r"]), cell(r["theta"]), cell(r["delta"]),
                    cell(r["delta"]["decimal"]), cell(r["best_r"]), cell(r["continuous_argmax"])});
}

// --- window -----------------------------------------------------------------------

void window_declare(ParamSet& p) {
    p.add("n", "-n", ParamKind::integer, nullptr, "Dimension n")
        .add("d", "-d", ParamKind::integer, nullptr, "Degree d")
        .add("r", "-r", ParamKind::integer, nullptr, "r")
        .add("q", "-q", ParamKind::real, nullptr, "Modulus q")
        .add("H", "-H", ParamKind::real, nullptr, "Length H (or give --beta)")
        .add("beta", "--beta", ParamKind::rational, nullptr, "H = q^beta; also decides nonemptiness exactly")
        .add("mu", "--mu", ParamKind::integer, nullptr, "Savings parameter mu (default M)");
}

void window_normalize(Json& cfg) {
    get_positive(cfg, "n");
    get_positive(cfg, "d");
    get_positive(cfg, "r");
    if (get_real(cfg, "q") <= 1) throw UsageError("-q must exceed 1");
    if (cfg["H"].is_null() == cfg["beta"].is_null()) throw UsageError("give exactly one of -H and --beta");
    if (!cfg["H"].is_null() && get_real(cfg, "H") <= 0) throw UsageError("-H must be positive");
}

Outcome window_run(const Json& cfg, const RunContext&) {
    const auto n = get_int(cfg, "n"), d = get_int(cfg, "d"), r = get_int(cfg, "r");
    const long double q = get_real(cfg, "q");
    const auto mu = get_opt_int(cfg, "mu");
    long double h = 0;
    Json res = Json::object();
    if (!cfg["beta"].is_null()) {
        const Rational beta = get_rational(cfg, "beta");
        h = std::pow(q, static_cast<long double>(to_double(beta)));
        res["beta"] = rational_json(beta);
        res["nonempty_exact"] = window_nonempty(n, d, r, beta, mu);
    } else {
        h = get_real(cfg, "H");
    }
    res["H"] = static_cast<double>(h);
    try {
        const auto w = p_window(n, d, r, h, q, mu);
        res["nonempty"] = true;
        res["theta"] = w.theta;
        res["mu"] = w.mu;
        res["lower"] = static_cast<double>(w.lower);
        res["upper"] = static_cast<double>(w.upper);
        res["hp_below_q"] = w.hp_below_q;
        res["below_theta_cap"] = w.below_theta_cap;
        return {res, kExitOk, {}};
    } catch (const EmptyWindow& e) {
        res["nonempty"] = false;
        res["reason"] = e.what();
        return {res, kExitNegative, {}};
    }
}

std::string window_text(const Json& r0) {
    const Json& r = r0["result"];
    if (!r["nonempty"].get<bool>()) return "empty window: " + cell(r["reason"]) + "\n";
    return kv_table({{"H", cell(r["H"])},
                     {"Theta, mu", cell(r["theta"]) + ", " + cell(r["mu"])},
                     {"P window", "[" + cell(r["lower"]) + ", " + cell(r["upper"]) + ")"},
                     {"HP < q", cell(r["hp_below_q"])},
                     {"P <= H q^(-1/(2 Theta))", cell(r["below_theta_cap"])}});
}

std::string window_csv(const Json& rec) {
    const Json& r = rec["result"];
    return csv_row({"H", "nonempty", "lower", "upper", "hp_below_q", "below_theta_cap"}) +
           csv_row({cell(r["H"]), cell(r["nonempty"]), cell(r.value("lower", Json())), cell(r.value("upper", Json())),
                    cell(r.value("hp_below_q", Json())), cell(r.value("below_theta_cap", Json()))});
}

// --- bound ---------------------------------------------------------------------------

void bound_declare(ParamSet& p) {
    p.add("n", "-n", ParamKind::integer, nullptr, "Dimension n")
        .add("d", "-d", ParamKind::integer, nullptr, "Degree d")
        .add("r", "-r", ParamKind::integer, nullptr, "r")
        .add("H", "-H", ParamKind::real, nullptr, "Length H")
        .add("P", "-P", ParamKind::real, nullptr, "Shift size P")
        .add("q", "-q", ParamKind::real, nullptr, "Modulus q")
        .add("J", "-J", ParamKind::real, nullptr, "J_r(G, 2H/P) (default (2H/P)^(2rn - M))");
}

void bound_normalize(Json& cfg) {
    get_positive(cfg, "n");
    get_positive(cfg, "d");
    get_positive(cfg, "r");
    for (const char* key : {"H", "P", "q"})
        if (get_real(cfg, key) <= 0) throw UsageError(std::string("-") + key + " must be positive");
}

Outcome bound_run(const Json& cfg, const RunContext&) {
    const auto n = get_int(cfg, "n"), d = get_int(cfg, "d"), r = get_int(cfg, "r");
    const auto m = standard_weight(static_cast<std::size_t>(n), static_cast<std::uint32_t>(d));
    const long double h = get_real(cfg, "H"), p = get_real(cfg, "P"), q = get_real(cfg, "q");
    const bool predicted = cfg["J"].is_null();
    const long double j = predicted
                              ? std::pow(2 * h / p, static_cast<long double>(2 * r * n) - static_cast<long double>(m))
                              : static_cast<long double>(get_real(cfg, "J"));
    const auto b = prop_bound_rhs(n, m, r, h, p, q, j);
    Json res{{"M", m},
             {"J", static_cast<double>(j)},
             {"J_predicted", predicted},
             {"prefactor", static_cast<double>(b.prefactor)},
             {"vinogradov_term", static_cast<double>(b.vinogradov_term)},
             {"shift_term", static_cast<double>(b.shift_term)},
             {"total", static_cast<double>(b.total)},
             {"note", "shape only: implied constant set to 1"}};
    return {res, kExitOk, {}};
}

std::string bound_text(const Json& rec) {
    const Json& r = rec["result"];
    return kv_table({{"J", cell(r["J"]) + (r["J_predicted"].get<bool>() ? " (sharp-exponent prediction)" : "")},
                     {"prefactor", cell(r["prefactor"])},
                     {"J^(1/2r) term", cell(r["vinogradov_term"])},
                     {"shift term", cell(r["shift_term"])},
                     {"total (shape only)", cell(r["total"])}});
}

std::string bound_csv(const Json& rec) {
    const Json& r = rec["result"];
    return csv_row({"J", "prefactor", "vinogradov_term", "shift_term", "total"}) +
           csv_row({cell(r["J"]), cell(r["prefactor"]), cell(r["vinogradov_term"]), cell(r["shift_term"]),
                    cell(r["total"])});
}

}  // namespace

void register_calc_commands(std::vector<CommandDef>& out) {
    out.push_back({"exponents", "Bound exponents, validity range and nontriviality threshold", exponents_declare,
                   exponents_normalize, exponents_run, exponents_text, exponents_csv});
    out.push_back({"delta", "Savings delta at H = q^(beta_n + kappa)", delta_declare, delta_normalize, delta_run,
                   delta_text, delta_csv});
    out.push_back({"window", "Admissible range for the shift size P", window_declare, window_normalize, window_run,
                   window_text, window_csv});
    out.push_back({"bound", "Evaluate the shape of the amplified bound", bound_declare, bound_normalize, bound_run,
                   bound_text, bound_csv});
}

}  // namespace burgess::cli
