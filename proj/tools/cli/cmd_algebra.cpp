#include "burgess/admissibility.hpp"
#include "burgess/systems.hpp"
#include "cli/cfg_access.hpp"
#include "cli/commands.hpp"

namespace burgess::cli {

namespace {

std::string monomial_text(const Monomial& m) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.exps.size(); ++i) out += (i ? "," : "") + std::to_string(m.exps[i]);
    return out + ")";
}

std::string kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::standard: return "standard";
        case SystemKind::ack: return "ack";
        case SystemKind::custom: return "custom";
    }
    return "?";
}

// --- system -----------------------------------------------------------------

void system_declare(ParamSet& p) {
    p.add("standard", "--standard", ParamKind::text, nullptr, "Standard system: n d", 2)
        .add("ack", "--ack", ParamKind::text, nullptr, "ACK system: caps k (caps comma-separated)", 2)
        .add("custom", "--custom", ParamKind::text, nullptr, "Custom exponent set, e.g. \"1,0;0,1\"")
        .add("system", "--system", ParamKind::text, nullptr, "System descriptor, e.g. \"standard 2 2\"");
}

void system_normalize(Json& cfg) {
    merge_system_keys(cfg);
    parse_system(cfg["system"].get<std::string>());
}

Outcome system_run(const Json& cfg, const RunContext&) {
    const MonomialSystem sys = parse_system(get_text(cfg, "system"));
    const auto cert = is_tdi(sys);
    Json lambda = Json::array();
    for (const auto& beta : sys.exponents()) lambda.push_back(beta.exps);
    Json res{{"descriptor", sys.descriptor()},
             {"kind", kind_name(sys.kind())},
             {"n", sys.dim()},
             {"d", sys.degree()},
             {"R", sys.rank()},
             {"M", sys.weight()},
             {"exponents", lambda},
             {"linear_monomials", sys.has_linear_monomials()},
             {"tdi", cert.tdi},
             {"downward_closed", is_downward_closed(sys)}};
    if (!cert.tdi) {
        res["certificate"] = Json{{"beta", cert.beta->exps}, {"gamma", cert.gamma->exps}, {"term", cert.term}};
    }
    if (sys.kind() == SystemKind::standard) {
        res["closed_form"] = Json{{"R", standard_rank(sys.dim(), sys.degree())},
                                  {"M", standard_weight(sys.dim(), sys.degree())}};
    }
    return {res, kExitOk, {}};
}

std::string system_text(const Json& rec) {
    const Json& r = rec["result"];
    std::string lambda;
    for (const auto& e : r["exponents"]) {
        Monomial m(e.get<std::vector<std::uint32_t>>());
        lambda += (lambda.empty() ? "" : " ") + monomial_text(m);
    }
    std::vector<std::pair<std::string, std::string>> rows{
        {"system", cell(r["descriptor"])}, {"n", cell(r["n"])},         {"d", cell(r["d"])},
        {"R", cell(r["R"])},               {"M", cell(r["M"])},         {"TDI", cell(r["tdi"])},
        {"linear monomials", cell(r["linear_monomials"])},              {"exponents", lambda}};
    if (r.contains("certificate")) rows.emplace_back("TDI certificate", cell(r["certificate"]["term"]));
    return kv_table(rows);
}

std::string system_csv(const Json& rec) {
    const Json& r = rec["result"];
    return csv_row({"descriptor", "n", "d", "R", "M", "tdi"}) +
           csv_row({cell(r["descriptor"]), cell(r["n"]), cell(r["d"]), cell(r["R"]), cell(r["M"]), cell(r["tdi"])});
}

// --- admissible ---------------------------------------------------------------

void admissible_declare(ParamSet& p) {
    p.add("q", "-q,--modulus", ParamKind::integer, nullptr, "Prime modulus q")
        .add("order", "-D,--order", ParamKind::integer, nullptr, "Character order Delta")
        .add("form", "-F,--form", ParamKind::text, nullptr, "Form F, e.g. \"x1*x2\"")
        .add("n", "-n,--dim", ParamKind::integer, nullptr, "Number of variables (default: largest index in F)")
        .add("full_char", "--full-char", ParamKind::flag, false,
             "Decompose even when deg F >= q (characteristic-aware algorithm)");
}

void admissible_normalize(Json& cfg) {
    get_positive(cfg, "q");
    get_positive(cfg, "order");
    const std::string form = get_text(cfg, "form");
    if (cfg["n"].is_null()) cfg["n"] = std::max<std::size_t>(1, max_variable_index(form));
    get_positive(cfg, "n");
}

Outcome admissible_run(const Json& cfg, const RunContext&) {
    const auto n = static_cast<std::size_t>(get_int(cfg, "n"));
    const IntPoly form = parse_int_poly(get_text(cfg, "form"), n);
    const auto q = static_cast<std::uint64_t>(get_int(cfg, "q"));
    const auto order = static_cast<std::uint32_t>(get_int(cfg, "order"));
    const CharPolicy policy = get_flag(cfg, "full_char") ? CharPolicy::full : CharPolicy::strict;
    const auto rep = check_admissible(form, q, order, policy);
    Json res{{"form", to_string(form)},
             {"reduced", to_string(reduce_mod(form, q))},
             {"verdict", to_string(rep.verdict)},
             {"power_free_part", rep.h ? Json(to_string(*rep.h)) : Json()},
             {"witness", rep.witness ? Json(*rep.witness) : Json()},
             {"method", rep.method},
             {"mode", policy == CharPolicy::full ? "full" : "strict"},
             {"reason", rep.reason}};
    const int code = rep.verdict == Verdict::yes  ? kExitOk
                     : rep.verdict == Verdict::no ? kExitNegative
                                                  : kExitIndeterminate;
    return {res, code, {}};
}

std::string admissible_text(const Json& rec) {
    const Json& r = rec["result"];
    const std::string verdict = r["verdict"] == "yes"   ? "admissible"
                                : r["verdict"] == "no" ? "not admissible"
                                                        : "indeterminate";
    std::vector<std::pair<std::string, std::string>> rows{{"verdict", verdict},
                                                          {"form mod q", cell(r["reduced"])}};
    if (!r["power_free_part"].is_null()) rows.emplace_back("power-free part h", cell(r["power_free_part"]));
    if (!r["witness"].is_null()) rows.emplace_back("invariant direction", r["witness"].dump());
    rows.emplace_back("mode", cell(r["mode"]));
    rows.emplace_back("reason", cell(r["reason"]));
    return kv_table(rows);
}

std::string admissible_csv(const Json& rec) {
    const Json& r = rec["result"];
    const Json& c = rec["config"];
    return csv_row({"form", "q", "order", "verdict", "power_free_part", "witness"}) +
           csv_row({cell(r["form"]), cell(c["q"]), cell(c["order"]), cell(r["verdict"]), cell(r["power_free_part"]),
                    r["witness"].is_null() ? "" : r["witness"].dump()});
}

}  // namespace

void register_algebra_commands(std::vector<CommandDef>& out) {
    out.push_back({"system", "Describe a monomial system (rank, weight, TDI status)", system_declare,
                   system_normalize, system_run, system_text, system_csv});
    out.push_back({"admissible", "Decide (Delta, q)-admissibility of a form", admissible_declare,
                   admissible_normalize, admissible_run, admissible_text, admissible_csv});
}

}  // namespace burgess::cli
