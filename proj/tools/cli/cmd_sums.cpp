#include <cmath>

#include "burgess/charsums.hpp"
#include "burgess/stratify.hpp"
#include "cli/cfg_access.hpp"
#include "cli/commands.hpp"
#include "cli/sample_t.hpp"

namespace burgess::cli {

namespace {

void add_character_params(ParamSet& p) {
    p.add("q", "-q,--modulus", ParamKind::integer, nullptr, "Prime modulus q")
        .add("order", "-D,--order", ParamKind::integer, nullptr, "Character order Delta (divides q-1)")
        .add("form", "-F,--form", ParamKind::text, nullptr, "Form F, e.g. \"x1*x2\"")
        .add("n", "-n,--dim", ParamKind::integer, nullptr, "Number of variables (default: largest index in F)");
}

void add_system_params(ParamSet& p) {
    p.add("standard", "--standard", ParamKind::text, nullptr, "Standard system: n d", 2)
        .add("ack", "--ack", ParamKind::text, nullptr, "ACK system: caps k", 2)
        .add("custom", "--custom", ParamKind::text, nullptr, "Custom exponent set, e.g. \"1,0;0,1\"")
        .add("system", "--system", ParamKind::text, nullptr, "System descriptor");
}

void normalize_character(Json& cfg) {
    get_positive(cfg, "q");
    get_positive(cfg, "order");
    const std::string form = get_text(cfg, "form");
    if (cfg["n"].is_null()) cfg["n"] = std::max<std::size_t>(1, max_variable_index(form));
    get_positive(cfg, "n");
}

std::size_t dim_of(const Json& cfg) { return static_cast<std::size_t>(get_int(cfg, "n")); }

IntPoly form_of(const Json& cfg) { return parse_int_poly(get_text(cfg, "form"), dim_of(cfg)); }

DirichletCharacter character_of(const Json& cfg) {
    return build_character(static_cast<std::uint64_t>(get_int(cfg, "q")), static_cast<std::uint32_t>(get_int(cfg, "order")));
}

Budget budget_of(const Json& cfg) { return Budget{static_cast<std::uint64_t>(get_int(cfg, "budget"))}; }

std::string join_ints(const Json& arr) {
    std::string out;
    for (const auto& v : arr) out += (out.empty() ? "" : ",") + cell(v);
    return out;
}

std::string complex_text(const Json& z) {
    return cell(z["re"]) + (z["im"].get<double>() < 0 ? " - " : " + ") + format_double(std::abs(z["im"].get<double>())) + "i";
}

// --- charsum --------------------------------------------------------------------------

void charsum_declare(ParamSet& p) {
    p.add("kind", "--kind", ParamKind::text, "mixed", "mixed, complete, additive or xi");
    add_character_params(p);
    add_system_params(p);
    p.add("phase", "-g,--phase", ParamKind::text, "0", "Real phase polynomial g (mixed sums)")
        .add("offset", "-N,--offset", ParamKind::int_list, nullptr, "Box offset N (default all zero)")
        .add("sides", "-H,--sides", ParamKind::int_list, nullptr, "Box sides H")
        .add("points", "--points", ParamKind::text, nullptr, "Collection as integer arrays, e.g. \"[[1,1],[2,1]]\"")
        .add("Q", "-Q", ParamKind::integer, nullptr, "Partition parameter Q (additive sums, Xi_Q)")
        .add("method", "--method", ParamKind::text, nullptr,
             "complete: termwise|product|both; additive: factorized|vertices|both")
        .add("budget", "--budget", ParamKind::integer, 1'000'000'000, "Maximum enumeration size");
}

void charsum_normalize(Json& cfg) {
    const std::string kind = get_text(cfg, "kind");
    get_positive(cfg, "budget");
    if (kind == "mixed" || kind == "complete") {
        normalize_character(cfg);
        for (const char* key : {"standard", "ack", "custom", "system", "Q"})
            if (!cfg[key].is_null()) throw UsageError(std::string("--") + key + " does not apply to --kind " + kind);
        cfg.erase("standard");
        cfg.erase("ack");
        cfg.erase("custom");
    } else if (kind == "additive" || kind == "xi") {
        for (const char* key : {"q", "order", "form", "n"})
            if (!cfg[key].is_null()) throw UsageError(std::string("--") + key + " does not apply to --kind " + kind);
        merge_system_keys(cfg);
        parse_system(cfg["system"].get<std::string>());
        if (kind == "additive") get_positive(cfg, "Q");
    } else {
        throw UsageError("--kind must be mixed, complete, additive or xi");
    }
    if (kind == "mixed") {
        const auto n = dim_of(cfg);
        if (cfg["offset"].is_null()) cfg["offset"] = std::vector<std::int64_t>(n, 0);
        if (get_int_list(cfg, "offset").size() != n || get_int_list(cfg, "sides").size() != n)
            throw UsageError("--offset and --sides need one value per variable");
        if (!cfg["method"].is_null()) throw UsageError("--method does not apply to mixed sums");
    } else {
        get_text(cfg, "points");
        if (cfg["method"].is_null()) cfg["method"] = kind == "complete" ? "termwise" : "factorized";
        const std::string m = cfg["method"].get<std::string>();
        const bool ok = kind == "complete"   ? (m == "termwise" || m == "product" || m == "both")
                        : kind == "additive" ? (m == "factorized" || m == "vertices" || m == "both")
                                             : m == "factorized";
        if (!ok) throw UsageError("--method '" + m + "' does not apply to --kind " + kind);
        if (kind == "xi") cfg.erase("method");
    }
}

Outcome charsum_run(const Json& cfg, const RunContext& ctx) {
    const std::string kind = get_text(cfg, "kind");
    const Budget budget = budget_of(cfg);
    Json res{{"kind", kind}};
    if (kind == "mixed") {
        const auto n = dim_of(cfg);
        const auto chi = character_of(cfg);
        const BoxRegion box{get_int_list(cfg, "offset"), get_int_list(cfg, "sides")};
        const auto s = mixed_sum(form_of(cfg), parse_real_poly(get_text(cfg, "phase"), n), chi, box, budget, ctx.policy);
        res["value"] = complex_json(s.value);
        res["abs"] = std::abs(s.value);
        res["terms"] = s.terms;
        res["roundoff_bound"] = s.roundoff_bound;
        return {res, kExitOk, {}};
    }
    const Collection points = parse_collection(get_text(cfg, "points"));
    if (kind == "complete") {
        const auto chi = character_of(cfg);
        const std::string m = get_text(cfg, "method");
        auto one = [&](MultSumMethod method) {
            const auto s = complete_mult_sum(form_of(cfg), points, chi, method, budget);
            return Json{{"method", method == MultSumMethod::termwise ? "termwise" : "product"},
                        {"value", complex_json(s.value)},
                        {"abs", std::abs(s.value)},
                        {"counts", s.counts},
                        {"zeros", s.zeros}};
        };
        Json rows = Json::array();
        if (m != "product") rows.push_back(one(MultSumMethod::termwise));
        if (m != "termwise") rows.push_back(one(MultSumMethod::product_polynomial));
        res["rows"] = rows;
        int code = kExitOk;
        if (rows.size() == 2) {
            const bool agree = rows[0]["counts"] == rows[1]["counts"] && rows[0]["zeros"] == rows[1]["zeros"];
            res["methods_agree"] = agree;
            if (!agree) code = kExitNegative;
        }
        return {res, code, {}};
    }
    const MonomialSystem sys = parse_system(get_text(cfg, "system"));
    res["moments"] = signed_moments(sys, points);
    res["xi"] = xi_indicator(sys, points);
    const auto q_param = get_opt_int(cfg, "Q");
    if (q_param) res["xi_Q"] = xi_indicator(sys, points, static_cast<std::uint64_t>(*q_param));
    if (kind == "xi") return {res, kExitOk, {}};

    const auto q = static_cast<std::uint64_t>(*q_param);
    res["vertex_count"] = bigint_json(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(sys.weight())));
    const std::string m = get_text(cfg, "method");
    Json rows = Json::array();
    auto one = [&](AddSumMethod method) {
        const auto s = additive_box_sum(sys, q, points, method, budget);
        return Json{{"method", method == AddSumMethod::factorized ? "factorized" : "vertices"},
                    {"value", complex_json(s.value)},
                    {"abs", std::abs(s.value)},
                    {"terms", s.terms}};
    };
    if (m != "vertices") rows.push_back(one(AddSumMethod::factorized));
    if (m != "factorized") rows.push_back(one(AddSumMethod::vertices));
    res["rows"] = rows;
    return {res, kExitOk, {}};
}

std::string charsum_text(const Json& rec) {
    const Json& r = rec["result"];
    const std::string kind = r["kind"];
    std::vector<std::pair<std::string, std::string>> rows;
    if (kind == "mixed") {
        rows = {{"S(F,g;N,H)", complex_text(r["value"])}, {"|S|", cell(r["abs"])}, {"terms", cell(r["terms"])}};
    } else if (kind == "complete") {
        for (const auto& row : r["rows"]) {
            rows.emplace_back("Sigma_mult [" + cell(row["method"]) + "]", complex_text(row["value"]));
            rows.emplace_back("exponent counts", row["counts"].dump() + ", zeros " + cell(row["zeros"]));
        }
        if (r.contains("methods_agree")) rows.emplace_back("methods agree", cell(r["methods_agree"]));
    } else {
        rows.emplace_back("signed moments", r["moments"].dump());
        rows.emplace_back("Xi", r["xi"].get<bool>() ? "1" : "0");
        if (r.contains("xi_Q")) rows.emplace_back("Xi_Q", r["xi_Q"].get<bool>() ? "1" : "0");
        if (kind == "additive") {
            rows.emplace_back("vertices", cell(r["vertex_count"]));
            for (const auto& row : r["rows"])
                rows.emplace_back("Sigma_add [" + cell(row["method"]) + "]", complex_text(row["value"]));
        }
    }
    return kv_table(rows);
}

std::string charsum_csv(const Json& rec) {
    const Json& r = rec["result"];
    const std::string kind = r["kind"];
    if (kind == "mixed")
        return csv_row({"kind", "re", "im", "abs", "terms"}) +
               csv_row({kind, cell(r["value"]["re"]), cell(r["value"]["im"]), cell(r["abs"]), cell(r["terms"])});
    if (kind == "xi")
        return csv_row({"kind", "xi", "xi_Q"}) +
               csv_row({kind, r["xi"].get<bool>() ? "1" : "0", r.contains("xi_Q") ? (r["xi_Q"].get<bool>() ? "1" : "0") : ""});
    std::string out = csv_row({"kind", "method", "re", "im", "abs"});
    for (const auto& row : r["rows"])
        out += csv_row({kind, cell(row["method"]), cell(row["value"]["re"]), cell(row["value"]["im"]), cell(row["abs"])});
    return out;
}

// --- stratify ---------------------------------------------------------------------------

void stratify_declare(ParamSet& p) {
    add_character_params(p);
    add_system_params(p);
    p.add("r", "-r", ParamKind::integer, nullptr, "Half-length r")
        .add("sides", "-k,--sides", ParamKind::int_list, nullptr, "Box sides k_1 <= ... <= k_n")
        .add("C", "--C", ParamKind::real, 1.0, "Threshold constant C")
        .add("C2", "--C2", ParamKind::real, 1.0, "Ceiling constant C''")
        .add("samples", "--samples", ParamKind::integer, nullptr, "Sample collections instead of enumerating")
        .add("seed", "--seed", ParamKind::integer, nullptr, "Seed (required with --samples)")
        .add("budget", "--budget", ParamKind::integer, 1'000'000'000, "Maximum enumeration size");
}

void stratify_normalize(Json& cfg) {
    normalize_character(cfg);
    const auto n = dim_of(cfg);
    merge_system_keys(cfg, "standard " + std::to_string(n) + " 1");
    if (parse_system(cfg["system"].get<std::string>()).dim() != n) throw UsageError("system dimension differs from n");
    get_positive(cfg, "r");
    if (get_int_list(cfg, "sides").size() != n) throw UsageError("--sides needs one value per variable");
    if (!cfg["samples"].is_null()) {
        get_positive(cfg, "samples");
        if (cfg["seed"].is_null()) throw UsageError("--seed is required with --samples");
    } else {
        cfg.erase("seed");
    }
    get_positive(cfg, "budget");
}

Outcome stratify_run(const Json& cfg, const RunContext& ctx) {
    const auto chi = character_of(cfg);
    StratifyOptions opt;
    opt.r = static_cast<std::size_t>(get_int(cfg, "r"));
    opt.sides = get_int_list(cfg, "sides");
    opt.c = get_real(cfg, "C");
    opt.c_ceiling = get_real(cfg, "C2");
    if (auto s = get_opt_int(cfg, "samples")) {
        opt.samples = static_cast<std::uint64_t>(*s);
        opt.seed = static_cast<std::uint64_t>(get_int(cfg, "seed"));
    }
    opt.budget = budget_of(cfg);
    opt.policy = ctx.policy;
    const auto rep = stratify_audit(form_of(cfg), chi, parse_system(get_text(cfg, "system")), opt);

    Json levels = Json::array();
    for (const auto& l : rep.levels)
        levels.push_back(Json{{"j", l.j},
                              {"threshold", l.threshold},
                              {"count", l.count},
                              {"count_in_variety", l.count_in_variety},
                              {"ceiling", static_cast<double>(l.ceiling)},
                              {"ratio", static_cast<double>(l.ratio)}});
    Json hist = Json::array();
    for (const auto& b : rep.histogram) hist.push_back(Json{{"log2_lower", b.log2_lower}, {"count", b.count}});
    Json res{{"q", rep.q},           {"n", rep.n},         {"r", rep.r},
             {"sampled", rep.sampled}, {"collections", rep.collections}, {"in_variety", rep.in_variety},
             {"levels", levels},     {"histogram", hist},  {"zero_sums", rep.zero_sums},
             {"max_abs", rep.max_abs}};
    return {res, kExitOk, {}};
}

std::string stratify_text(const Json& rec) {
    const Json& r = rec["result"];
    std::string out = kv_table({{"collections", cell(r["collections"])},
                                {"on variety (Xi = 1)", cell(r["in_variety"])},
                                {"max |Sigma_mult|", cell(r["max_abs"])},
                                {"zero sums", cell(r["zero_sums"])}});
    out += "\n j  threshold  count  count_on_variety  ceiling  ratio\n";
    for (const auto& l : r["levels"])
        out += " " + cell(l["j"]) + "  " + cell(l["threshold"]) + "  " + cell(l["count"]) + "  " +
               cell(l["count_in_variety"]) + "  " + cell(l["ceiling"]) + "  " + cell(l["ratio"]) + "\n";
    out += "\nhistogram of |Sigma_mult| / q^(n/2):\n";
    for (const auto& b : r["histogram"]) {
        const int lo = b["log2_lower"].get<int>();
        out += "  [2^" + std::to_string(lo) + ", 2^" + std::to_string(lo + 1) + ")  " + cell(b["count"]) + "\n";
    }
    return out;
}

std::string stratify_csv(const Json& rec) {
    std::string out = csv_row({"j", "threshold", "count", "ceiling", "ratio"});
    for (const auto& l : rec["result"]["levels"])
        out += csv_row({cell(l["j"]), cell(l["threshold"]), cell(l["count"]), cell(l["ceiling"]), cell(l["ratio"])});
    return out;
}

// --- verify prod-lemma --------------------------------------------------------------------

void prod_declare(ParamSet& p) {
    add_system_params(p);
    p.add("n", "-n", ParamKind::integer, nullptr, "Dimension (with -d: standard system)")
        .add("d", "-d", ParamKind::integer, nullptr, "Degree (with -n: standard system)")
        .add("r", "-r", ParamKind::integer, nullptr, "Half-length r")
        .add("K", "-K", ParamKind::integer, nullptr, "Points drawn from (0, K]^n")
        .add("Q", "-Q", ParamKind::integer, nullptr, "Partition parameter (default ceil(2rK))")
        .add("exhaustive", "--exhaustive", ParamKind::flag, false, "Check every collection (default without --samples)")
        .add("samples", "--samples", ParamKind::integer, nullptr, "Number of sampled collections")
        .add("seed", "--seed", ParamKind::integer, nullptr, "Seed (required with --samples)")
        .add("method", "--method", ParamKind::text, "factorized", "factorized or vertices")
        .add("budget", "--budget", ParamKind::integer, 1'000'000'000, "Maximum enumeration size");
}

void prod_normalize(Json& cfg) {
    std::string fallback;
    if (!cfg["n"].is_null() || !cfg["d"].is_null())
        fallback = "standard " + std::to_string(get_positive(cfg, "n")) + " " + std::to_string(get_positive(cfg, "d"));
    const bool shorthand = !fallback.empty();
    for (const char* key : {"standard", "ack", "custom", "system"})
        if (shorthand && !cfg[key].is_null()) throw UsageError("give either -n/-d or a system, not both");
    cfg.erase("n");
    cfg.erase("d");
    merge_system_keys(cfg, fallback);
    parse_system(cfg["system"].get<std::string>());
    get_positive(cfg, "r");
    get_positive(cfg, "K");
    if (cfg["Q"].is_null()) cfg["Q"] = partition_parameter(static_cast<std::size_t>(get_int(cfg, "r")),
                                                           static_cast<std::uint64_t>(get_int(cfg, "K")));
    get_positive(cfg, "Q");
    const bool sampled = !cfg["samples"].is_null();
    if (sampled && get_flag(cfg, "exhaustive")) throw UsageError("--exhaustive and --samples are exclusive");
    if (sampled) {
        get_positive(cfg, "samples");
        if (cfg["seed"].is_null()) throw UsageError("--seed is required with --samples");
    } else {
        cfg.erase("seed");
    }
    cfg["exhaustive"] = !sampled;
    const std::string m = get_text(cfg, "method");
    if (m != "factorized" && m != "vertices") throw UsageError("--method must be factorized or vertices");
    get_positive(cfg, "budget");
}

Outcome prod_run(const Json& cfg, const RunContext& ctx) {
    const MonomialSystem sys = parse_system(get_text(cfg, "system"));
    ProdLemmaOptions opt;
    opt.r = static_cast<std::size_t>(get_int(cfg, "r"));
    opt.k = static_cast<std::uint64_t>(get_int(cfg, "K"));
    opt.q_param = static_cast<std::uint64_t>(get_int(cfg, "Q"));
    if (auto s = get_opt_int(cfg, "samples")) {
        opt.samples = static_cast<std::uint64_t>(*s);
        opt.seed = static_cast<std::uint64_t>(get_int(cfg, "seed"));
    }
    opt.method = get_text(cfg, "method") == "vertices" ? AddSumMethod::vertices : AddSumMethod::factorized;
    opt.budget = budget_of(cfg);
    opt.policy = ctx.policy;
    const auto rep = verify_prod_lemma(sys, opt);

    Json wrap = Json::array();
    for (const auto& c : rep.wraparound_examples) wrap.push_back(collection_json(c));
    Json res{{"system", sys.descriptor()},
             {"Q", rep.q_param},
             {"M", rep.weight},
             {"hypothesis", rep.hypothesis},
             {"collections", rep.checked},
             {"collection_vertex_terms", rep.vertex_terms},
             {"passed", rep.passed},
             {"in_variety", rep.in_variety},
             {"wraparound", rep.wraparound},
             {"wraparound_examples", wrap},
             {"max_relative_error", rep.max_error},
             {"first_failure", rep.first_failure ? collection_json(*rep.first_failure) : Json()}};
    return {res, rep.passed == rep.checked ? kExitOk : kExitNegative, {}};
}

std::string prod_text(const Json& rec) {
    const Json& r = rec["result"];
    const bool pass = r["passed"] == r["collections"];
    std::string out = std::string(pass ? "PASS " : "FAIL ") + cell(r["passed"]) + "/" + cell(r["collections"]) +
                      " collections (" + cell(r["collection_vertex_terms"]) + " collection-vertex terms)\n";
    out += kv_table({{"system", cell(r["system"])},
                     {"Q", cell(r["Q"])},
                     {"M", cell(r["M"])},
                     {"Q >= 2rK", cell(r["hypothesis"])},
                     {"on variety (Xi = 1)", cell(r["in_variety"])},
                     {"wraparound (Xi_Q = 1, Xi = 0)", cell(r["wraparound"])},
                     {"max relative error", cell(r["max_relative_error"])}});
    if (!r["first_failure"].is_null()) out += "first failure: " + r["first_failure"].dump() + "\n";
    for (const auto& w : r["wraparound_examples"]) out += "wraparound: " + w.dump() + "\n";
    return out;
}

std::string prod_csv(const Json& rec) {
    const Json& r = rec["result"];
    return csv_row({"system", "Q", "M", "hypothesis", "collections", "passed", "wraparound", "max_relative_error"}) +
           csv_row({cell(r["system"]), cell(r["Q"]), cell(r["M"]), cell(r["hypothesis"]), cell(r["collections"]),
                    cell(r["passed"]), cell(r["wraparound"]), cell(r["max_relative_error"])});
}

// --- verify b-sum -----------------------------------------------------------------------------

void bsum_declare(ParamSet& p) {
    p.add("n", "-n", ParamKind::integer, nullptr, "Dimension n (fixed)")
        .add("r", "-r", ParamKind::integer, nullptr, "r (fixed)")
        .add("q", "-q", ParamKind::integer, nullptr, "Prime q (fixed)")
        .add("K", "-K", ParamKind::int_list, nullptr, "Check one sorted tuple K_1..K_n instead of sampling")
        .add("trials", "--trials", ParamKind::integer, 1000, "Samples satisfying the hypothesis")
        .add("seed", "--seed", ParamKind::integer, nullptr, "Seed (required when sampling)")
        .add("q_max", "--q-max", ParamKind::integer, 10000, "Largest sampled prime")
        .add("r_max", "--r-max", ParamKind::integer, 20, "Largest sampled r")
        .add("n_max", "--n-max", ParamKind::integer, 4, "Largest sampled n");
}

void bsum_normalize(Json& cfg) {
    if (!cfg["K"].is_null()) {
        get_positive(cfg, "n");
        get_positive(cfg, "r");
        get_positive(cfg, "q");
        for (const char* key : {"trials", "seed", "q_max", "r_max", "n_max"}) cfg.erase(key);
        return;
    }
    if (cfg["seed"].is_null()) throw UsageError("--seed is required when sampling");
    get_positive(cfg, "trials");
    if (get_int(cfg, "n_max") < 2 || get_int(cfg, "q_max") < 2) throw UsageError("--n-max and --q-max must be at least 2");
}

Json check_json(const BSumCheck& c) {
    return Json{{"hypothesis", c.hypothesis},
                {"ratio", static_cast<double>(c.ratio)},
                {"lhs", static_cast<double>(c.lhs)},
                {"rhs", static_cast<double>(c.rhs)},
                {"partial_lhs", static_cast<double>(c.partial_lhs)},
                {"partial_rhs", static_cast<double>(c.partial_rhs)},
                {"holds", c.holds}};
}

Outcome bsum_run(const Json& cfg, const RunContext&) {
    if (!cfg["K"].is_null()) {
        const auto n = get_int(cfg, "n");
        const auto r = get_int(cfg, "r");
        const auto c = check_b_sum(n, r, static_cast<long double>(get_int(cfg, "q")), get_int_list(cfg, "K"));
        Json res{{"mode", "single"}, {"check", check_json(c)}};
        return {res, !c.hypothesis || c.holds ? kExitOk : kExitNegative, {}};
    }
    BSumOptions opt;
    opt.trials = static_cast<std::uint64_t>(get_int(cfg, "trials"));
    opt.seed = static_cast<std::uint64_t>(get_int(cfg, "seed"));
    opt.q_max = static_cast<std::uint64_t>(get_int(cfg, "q_max"));
    opt.r_max = get_int(cfg, "r_max");
    opt.n_max = get_int(cfg, "n_max");
    opt.n = get_opt_int(cfg, "n");
    opt.r = get_opt_int(cfg, "r");
    if (auto q = get_opt_int(cfg, "q")) opt.q = static_cast<std::uint64_t>(*q);
    const auto rep = verify_b_sum_lemma(opt);
    Json res{{"mode", "sampled"},
             {"drawn", rep.trials},
             {"checked", rep.checked},
             {"skipped", rep.skipped},
             {"violations", rep.violations},
             {"worst_ratio", static_cast<double>(rep.worst_margin)}};
    if (rep.first_violation) {
        const auto& s = *rep.first_violation;
        res["first_violation"] = Json{{"n", s.n}, {"r", s.r}, {"q", s.q}, {"K", s.k}, {"check", check_json(s.check)}};
    }
    return {res, rep.violations == 0 ? kExitOk : kExitNegative, {}};
}

std::string bsum_text(const Json& rec) {
    const Json& r = rec["result"];
    if (r["mode"] == "single") {
        const Json& c = r["check"];
        std::string verdict = !c["hypothesis"].get<bool>() ? "SKIPPED (q^(1/2) K_1^-Theta > 1)"
                              : c["holds"].get<bool>()     ? "PASS"
                                                           : "FAIL";
        return verdict + "\n" +
               kv_table({{"q^(1/2) K_1^-Theta", cell(c["ratio"])},
                         {"sum_j q^(j/2) / B(j)", cell(c["lhs"])},
                         {"n q^(1/2) K_1^-Theta", cell(c["rhs"])},
                         {"partial sum (j < n)", cell(c["partial_lhs"])},
                         {"geometric bound (j < n)", cell(c["partial_rhs"])}});
    }
    std::string out = std::string(r["violations"] == 0 ? "PASS " : "FAIL ") + cell(r["checked"]) + " samples, " +
                      cell(r["violations"]) + " violations\n";
    out += kv_table({{"skipped (hypothesis fails)", cell(r["skipped"])}, {"max lhs/rhs", cell(r["worst_ratio"])}});
    if (r.contains("first_violation")) out += "first violation: " + r["first_violation"].dump() + "\n";
    return out;
}

std::string bsum_csv(const Json& rec) {
    const Json& r = rec["result"];
    if (r["mode"] == "single") {
        const Json& c = r["check"];
        return csv_row({"hypothesis", "ratio", "lhs", "rhs", "holds"}) +
               csv_row({cell(c["hypothesis"]), cell(c["ratio"]), cell(c["lhs"]), cell(c["rhs"]), cell(c["holds"])});
    }
    return csv_row({"checked", "skipped", "violations", "worst_ratio"}) +
           csv_row({cell(r["checked"]), cell(r["skipped"]), cell(r["violations"]), cell(r["worst_ratio"])});
}

// --- sample-t ----------------------------------------------------------------------------------

void samplet_declare(ParamSet& p) {
    add_character_params(p);
    add_system_params(p);
    p.add("offset", "-N,--offset", ParamKind::int_list, nullptr, "Box offset N (default all zero)")
        .add("sides", "-H,--sides", ParamKind::int_list, nullptr, "Box sides H")
        .add("samples", "--samples", ParamKind::integer, 64, "Number of (g, K) samples; the first is g = 0, K = H")
        .add("seed", "--seed", ParamKind::integer, nullptr, "Seed (required)")
        .add("probes", "--probe", ParamKind::text_list, nullptr, "Extra probe \"g-polynomial ; K1,K2,...\" (repeatable)")
        .add("budget", "--budget", ParamKind::integer, 1'000'000'000, "Maximum enumeration size");
}

void samplet_normalize(Json& cfg) {
    normalize_character(cfg);
    const auto n = dim_of(cfg);
    merge_system_keys(cfg, "standard " + std::to_string(n) + " 1");
    if (parse_system(cfg["system"].get<std::string>()).dim() != n) throw UsageError("system dimension differs from n");
    if (cfg["offset"].is_null()) cfg["offset"] = std::vector<std::int64_t>(n, 0);
    if (get_int_list(cfg, "offset").size() != n || get_int_list(cfg, "sides").size() != n)
        throw UsageError("--offset and --sides need one value per variable");
    get_positive(cfg, "samples");
    if (cfg["seed"].is_null()) throw UsageError("--seed is required");
    if (cfg["probes"].is_null()) cfg["probes"] = Json::array();
    get_positive(cfg, "budget");
}

std::vector<TProbe> parse_probes(const Json& cfg, std::size_t n) {
    std::vector<TProbe> out;
    for (const auto& p : cfg["probes"]) {
        const std::string text = p.get<std::string>();
        const auto semi = text.find(';');
        if (semi == std::string::npos) throw UsageError("probe must look like \"g ; K1,K2\"");
        out.push_back({parse_real_poly(text.substr(0, semi), n), parse_int_list(text.substr(semi + 1))});
    }
    return out;
}

Outcome samplet_run(const Json& cfg, const RunContext& ctx) {
    const auto n = dim_of(cfg);
    const auto chi = character_of(cfg);
    const BoxRegion box{get_int_list(cfg, "offset"), get_int_list(cfg, "sides")};
    const auto est = sample_t(form_of(cfg), chi, parse_system(get_text(cfg, "system")), box,
                              static_cast<std::uint64_t>(get_int(cfg, "samples")),
                              static_cast<std::uint64_t>(get_int(cfg, "seed")), parse_probes(cfg, n), budget_of(cfg),
                              ctx.policy);
    Json res{{"estimate", est.estimate},
             {"label", "sampled lower estimate of T (not a certified bound)"},
             {"zero_phase_value", est.zero_phase_value},
             {"samples", est.samples},
             {"seed", est.seed},
             {"best_sample", est.best_sample},
             {"best_coefficients", est.best.coefficients},
             {"best_sides", est.best.sides},
             {"probe_values", est.probe_values},
             {"running_max", est.running_max}};
    return {res, kExitOk, {}};
}

std::string samplet_text(const Json& rec) {
    const Json& r = rec["result"];
    return kv_table({{"T estimate (sampled, lower)", cell(r["estimate"])},
                     {"|S(F,0;N,H)| (certified lower bound)", cell(r["zero_phase_value"])},
                     {"samples", cell(r["samples"])},
                     {"seed", cell(r["seed"])},
                     {"best sample", cell(r["best_sample"])},
                     {"best sub-box K", join_ints(r["best_sides"])},
                     {"probes", std::to_string(r["probe_values"].size())}});
}

std::string samplet_csv(const Json& rec) {
    const Json& r = rec["result"];
    std::string out = csv_row({"sample", "running_max"});
    const Json& rm = r["running_max"];
    for (std::size_t i = 0; i < rm.size(); ++i) out += csv_row({std::to_string(i), cell(rm[i])});
    return out;
}

}  // namespace

void register_sum_commands(std::vector<CommandDef>& out) {
    out.push_back({"charsum", "Evaluate mixed, complete or additive character sums", charsum_declare, charsum_normalize,
                   charsum_run, charsum_text, charsum_csv});
    out.push_back({"stratify", "Audit complete-sum threshold exceedances over a box of collections", stratify_declare,
                   stratify_normalize, stratify_run, stratify_text, stratify_csv});
    out.push_back({"verify prod-lemma", "Check Sigma_add = Q^M Xi over collections", prod_declare, prod_normalize,
                   prod_run, prod_text, prod_csv});
    out.push_back({"verify b-sum", "Check the B-function sum inequality", bsum_declare, bsum_normalize, bsum_run,
                   bsum_text, bsum_csv});
    out.push_back({"sample-t", "Sampled estimate of the supremum T(F, G; N, H)", samplet_declare, samplet_normalize,
                   samplet_run, samplet_text, samplet_csv});
}

}  // namespace burgess::cli
