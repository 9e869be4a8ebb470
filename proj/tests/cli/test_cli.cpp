#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/app.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "burgess");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = burgess::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("burgess_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("system descriptions") {
    const auto r = cli({"--json", "system", "--standard", "2", "2"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["result"]["R"] == 5);
    CHECK(j["result"]["M"] == 8);
    CHECK(j["result"]["tdi"] == true);
    CHECK(json_of(cli({"--json", "system", "--ack", "1,1", "2"}))["result"]["M"] == 4);
    CHECK(cli({"system", "--custom", "1,0;0"}).code == 2);
    CHECK(cli({"system", "--standard", "2", "x"}).code == 2);
}

TEST_CASE("admissibility exit codes") {
    CHECK(cli({"admissible", "-q", "5", "-D", "2", "-F", "x1*x2"}).code == 0);
    CHECK(cli({"admissible", "-q", "5", "-D", "2", "-F", "x1^2"}).code == 1);
    CHECK(cli({"admissible", "-q", "3", "-D", "2", "-F", "x1^4"}).code == 3);
    CHECK(cli({"admissible", "-q", "3", "-D", "2", "-F", "x1^4", "--full-char"}).code == 1);
    CHECK(cli({"admissible", "-q", "4", "-D", "2", "-F", "x1"}).code == 2);
    CHECK(cli({"admissible", "-q", "5", "-D", "2"}).code == 2);
}

TEST_CASE("J counts") {
    const auto r = cli({"--csv", "jr", "--standard", "2", "1", "-r", "2", "-X", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "system,r,X,J,method\n\"standard(2,1)\",2,2,36,mitm\n");
    const auto both = json_of(cli({"--json", "jr", "--standard", "2", "1", "-r", "2", "-X", "2", "--method", "both"}));
    REQUIRE(both["result"]["rows"].size() == 2);
    CHECK(both["result"]["rows"][0]["J"] == both["result"]["rows"][1]["J"]);
    CHECK(both["result"]["methods_agree"] == true);
    CHECK(cli({"jr", "--standard", "2", "1", "-r", "3", "-X", "100", "--budget", "1000"}).code == 4);
}

TEST_CASE("calculus commands") {
    const auto e = json_of(cli({"--json", "exponents", "-n", "2", "-d", "1", "-r", "5"}));
    CHECK(e["result"]["beta_threshold"]["fraction"] == "5/12");
    const auto d = json_of(cli({"--json", "delta", "-n", "2", "-d", "1", "--kappa", "0.02"}));
    CHECK(d["result"]["r"] == 17);
    CHECK(d["result"]["delta"]["fraction"] == "1/1400");
    CHECK(cli({"delta", "-n", "2", "-d", "3", "--kappa", "0.5"}).code == 2);
    CHECK(cli({"window", "-n", "2", "-d", "1", "-r", "5", "-q", "10000", "--beta", "0.7"}).code == 1);
    CHECK(cli({"bound", "-n", "2", "-d", "1", "-r", "5", "-q", "1e6", "-H", "1e4", "-P", "1e3"}).code == 2);
}

TEST_CASE("identity and inequality checks") {
    const auto p = cli({"verify", "prod-lemma", "-n", "2", "-d", "1", "-r", "1", "-K", "2", "--exhaustive"});
    REQUIRE(p.code == 0);
    CHECK(p.out.rfind("PASS 16/16 collections (256 collection-vertex terms)", 0) == 0);
    CHECK(cli({"verify", "prod-lemma", "-n", "2", "-d", "2", "-r", "2", "-K", "2", "--samples", "20"}).code == 2);
    CHECK(cli({"verify", "b-sum", "--trials", "50", "--seed", "3"}).code == 0);
    CHECK(cli({"verify", "b-sum", "-n", "2", "-r", "5", "-q", "101", "-K", "10", "12"}).code == 0);
    CHECK(cli({"verify"}).code == 2);
}

TEST_CASE("character sums") {
    const auto c = json_of(cli({"--json", "charsum", "--kind", "complete", "-q", "5", "-D", "2", "-F", "x1*x2",
                                "--points", "[[1,1],[1,1]]", "--method", "both"}));
    CHECK(c["result"]["rows"][0]["value"]["re"] == 16.0);
    CHECK(c["result"]["methods_agree"] == true);
    const auto m = json_of(cli({"--json", "charsum", "-q", "13", "-D", "2", "-F", "x1*x2", "-H", "13,13"}));
    CHECK(std::abs(m["result"]["abs"].get<double>()) < 1e-9);
    const auto a = json_of(cli({"--json", "charsum", "--kind", "additive", "--standard", "2", "1", "-Q", "4",
                                "--points", "[[1,1],[1,1]]", "--method", "both"}));
    CHECK(a["result"]["rows"][0]["value"]["re"] == doctest::Approx(16));
    CHECK(a["result"]["rows"][1]["value"]["re"] == doctest::Approx(16));
    CHECK(cli({"charsum", "--kind", "bogus"}).code == 2);
    CHECK(cli({"charsum", "--kind", "xi", "--standard", "2", "1", "-q", "5", "--points", "[[1,1],[1,1]]"}).code == 2);
}

TEST_CASE("stratification and sampled supremum") {
    const auto s = cli({"--csv", "stratify", "-q", "7", "-D", "2", "-F", "x1*x2", "-r", "2", "-k", "2,2"});
    REQUIRE(s.code == 0);
    CHECK(s.out.rfind("j,threshold,count,ceiling,ratio\n1,7,64,128,0.5\n", 0) == 0);
    CHECK(cli({"stratify", "-q", "7", "-D", "2", "-F", "x1*x2", "-r", "2", "-k", "2,2", "--samples", "5"}).code == 2);

    const std::vector<std::string> base{"--json", "sample-t", "-q", "13", "-D", "2", "-F", "x1*x2", "-H", "5,5",
                                        "--seed", "9"};
    auto one = base;
    one.insert(one.end(), {"--samples", "1"});
    const auto t1 = json_of(cli(one));
    const auto zero = json_of(cli({"--json", "charsum", "-q", "13", "-D", "2", "-F", "x1*x2", "-H", "5,5"}));
    CHECK(t1["result"]["estimate"] == zero["result"]["abs"]);

    auto probed = base;
    probed.insert(probed.end(), {"--samples", "10", "--probe", "0.3*x1 ; 4,5"});
    const auto tp = json_of(cli(probed));
    const auto probe_val = json_of(cli({"--json", "charsum", "-q", "13", "-D", "2", "-F", "x1*x2", "-H", "4,5",
                                        "-g", "0.3*x1"}));
    CHECK(tp["result"]["estimate"].get<double>() >= probe_val["result"]["abs"].get<double>());
    const auto& rm = tp["result"]["running_max"];
    for (std::size_t i = 1; i < rm.size(); ++i) CHECK(rm[i].get<double>() >= rm[i - 1].get<double>());
    CHECK(cli({"sample-t", "-q", "13", "-D", "2", "-F", "x1*x2", "-H", "5,5"}).code == 2);
}

TEST_CASE("outputs do not depend on the thread count") {
    const std::vector<std::vector<std::string>> cmds{
        {"jr", "--standard", "2", "2", "-r", "2", "-X", "3,4,5", "--method", "both"},
        {"charsum", "-q", "101", "-D", "2", "-F", "x1*x2 + x2", "-H", "40,30", "-g", "0.125*x1*x2"},
        {"stratify", "-q", "11", "-D", "2", "-F", "x1*x2", "-r", "2", "-k", "2,3"},
        {"sample-t", "-q", "13", "-D", "2", "-F", "x1*x2", "-H", "6,6", "--seed", "4", "--samples", "20"},
    };
    for (const auto& c : cmds)
        for (const char* mode : {"--json", "--csv"}) {
            auto a = c, b = c;
            a.insert(a.begin(), mode);
            b.insert(b.begin(), {mode, "--threads", "4"});
            const auto ra = cli(a), rb = cli(b), rc = cli(a);
            CHECK(ra.code == 0);
            CHECK(ra.out == rb.out);
            CHECK(ra.out == rc.out);
        }
}

TEST_CASE("config files and flag precedence") {
    const fs::path dir = scratch("config");
    const fs::path cfg = dir / "jr.json";
    std::ofstream(cfg) << R"({"system": "standard 2 1", "r": 2, "x": [2, 3]})";
    const auto r = json_of(cli({"--json", "--config", cfg.string(), "jr"}));
    CHECK(r["config"]["x"] == nlohmann::json::array({2, 3}));
    CHECK(r["config"]["budget"] == 1000000000);
    const auto over = json_of(cli({"--json", "--config", cfg.string(), "jr", "-X", "4"}));
    CHECK(over["config"]["x"] == nlohmann::json::array({4}));
    std::ofstream(dir / "bad.json") << R"({"nonsense": 1})";
    CHECK(cli({"--config", (dir / "bad.json").string(), "jr"}).code == 2);
    CHECK(cli({"--config", (dir / "missing.json").string(), "jr"}).code == 2);
}

TEST_CASE("cache replay") {
    const fs::path dir = scratch("cache");
    const std::vector<std::string> args{"--json", "--cache", dir.string(), "jr", "--standard", "2", "1", "-r", "2",
                                        "-X", "6"};
    const auto first = cli(args);
    REQUIRE(first.code == 0);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    const auto second = cli(args);
    CHECK(second.out == first.out);

    auto timed = args;
    timed.insert(timed.begin(), "--timing");
    const auto t = json_of(cli(timed));
    CHECK(t["timing"]["cached"] == true);
    CHECK(t["timing"]["seconds"].get<double>() < 0.01);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"--json", "--csv", "system", "--standard", "2", "2"}).code == 2);
    CHECK(cli({"--version"}).code == 0);
}
