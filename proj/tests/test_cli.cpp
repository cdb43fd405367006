#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spanlf/cli.hpp"

using spanlf::run_cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("spanlf_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("maxlf") {
    Run r = cli({"maxlf", "--graph", "C~"});
    CHECK(r.code == spanlf::kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 3);
    CHECK(j["n"] == 4);
    CHECK(j["witness"]["paths"] == nlohmann::json::parse("[[0,1,2,3]]"));

    r = cli({"maxlf", "--input", "-", "--format", "table"}, "C~\nBg\n");
    CHECK(r.code == 0);
    CHECK(r.out == "C~\t3\t{\"paths\":[[0,1,2,3]]}\nBg\t2\t{\"paths\":[[0,1,2]]}\n");

    Run dp = cli({"maxlf", "--graph", "H?H_GB@", "--method", "dp"});
    Run bnb = cli({"maxlf", "--graph", "H?H_GB@", "--method", "bnb"});
    CHECK(nlohmann::json::parse(dp.out)["size"] == nlohmann::json::parse(bnb.out)["size"]);
}

TEST_CASE("hcn") {
    Run r = cli({"hcn", "--graph", "Bg", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out == "Bg\t1\n");
    r = cli({"hcn", "--graph", "@"});
    CHECK(r.code == spanlf::kExitInput);
    CHECK(r.err.find("fewer than 3") != std::string::npos);
}

TEST_CASE("augment") {
    // P6 with the middle edge missing.
    Run r = cli({"augment", "--graph", "EgCG", "--forest", R"({"paths":[[0,1,2],[3,4,5]]})", "--u", "2",
                 "--v", "3"});
    CHECK(r.code == spanlf::kExitPrecondition);

    r = cli({"augment", "--graph", "Em|g", "--forest", R"({"paths":[[0,1,2],[3,4,5]]})", "--u", "2", "--v",
             "3"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["edges"] == 5);
    CHECK(j["paths"].size() == 1);

    const std::string forest_file = temp_path("forest.json");
    std::ofstream(forest_file) << R"({"paths":[[0,1,2],[3,4,5]]})";
    Run f = cli({"augment", "--graph", "Em|g", "--forest-file", forest_file, "--u", "2", "--v", "3"});
    CHECK(f.out == r.out);
    std::remove(forest_file.c_str());

    r = cli({"augment", "--graph", "Em|g", "--forest", "{bad", "--u", "2", "--v", "3"});
    CHECK(r.code == spanlf::kExitInput);
    CHECK(r.err.find("malformed_json") != std::string::npos);
}

TEST_CASE("ex") {
    Run r = cli({"ex", "--n", "6", "--k", "2"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact"] == 10);
    CHECK(j["complete"] == true);
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(nlohmann::json::parse(cli({"ex", "--n", "6", "--k", "2", "--timing"}).out).contains("elapsed_ms"));

    Run g6 = cli({"ex", "--n", "9", "--k", "3", "--format", "graph6"});
    CHECK(g6.out == "H??F~~~\nH@Kxx{~\n");

    const std::string wfile = temp_path("witnesses.g6");
    Run w = cli({"ex", "--n", "9", "--k", "3", "--witnesses-out", wfile});
    CHECK(w.code == 0);
    CHECK(slurp(wfile) == g6.out);
    std::remove(wfile.c_str());

    Run t = cli({"ex", "--n", "12", "--k", "4", "--format", "table"});
    CHECK(t.out == "n=12 k=4 exact=38 lower=36 upper=40 witnesses=1 classes=3 complete=yes\n");

    CHECK(cli({"ex", "--n", "9", "--k", "3", "--strategy", "complete", "--budget-nodes", "5"}).code ==
          spanlf::kExitBudget);
    CHECK(cli({"ex", "--n", "15", "--k", "3"}).code == spanlf::kExitInput);
    CHECK(cli({"ex", "--n", "9", "--k", "3", "--format", "csv"}).code == spanlf::kExitInput);
}

TEST_CASE("sweep") {
    Run r = cli({"sweep", "--n-range", "6:9", "--k-range", "2:3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,k,complete,exact", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
    Run j = cli({"sweep", "--n-range", "6:9", "--k-range", "2:3"});
    CHECK(nlohmann::json::parse(j.out)["k0_evidence"] == 3);
    CHECK(cli({"sweep", "--n-range", "9:6", "--k-range", "2:3"}).code == spanlf::kExitInput);
    CHECK(cli({"sweep", "--n-range", "x", "--k-range", "2:3"}).code == spanlf::kExitInput);
    CHECK(cli({"sweep", "--n-range", "9:9", "--k-range", "3:3", "--budget-nodes", "3"}).code ==
          spanlf::kExitBudget);
}

TEST_CASE("exit codes for bad input") {
    CHECK(cli({}).code == spanlf::kExitInput);
    CHECK(cli({"bogus"}).code == spanlf::kExitInput);
    CHECK(cli({"maxlf", "--graph", "C"}).code == spanlf::kExitInput);
    CHECK(cli({"maxlf", "--graph", "C~", "--input", "x"}).code == spanlf::kExitInput);
    CHECK(cli({"maxlf", "--input", "/nonexistent/graphs.g6"}).code == spanlf::kExitInput);
    CHECK(cli({"maxlf", "--graph", "C~", "--method", "magic"}).code == spanlf::kExitInput);
    CHECK(cli({"maxlf", "--graph", "C~", "--workers", "0"}).code == spanlf::kExitInput);
    CHECK(cli({"maxlf"}, "").code == spanlf::kExitInput);
    CHECK(cli({"--help"}).code == spanlf::kExitOk);
}

TEST_CASE("output file") {
    const std::string path = temp_path("out.json");
    Run r = cli({"hcn", "--graph", "C~", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(nlohmann::json::parse(slurp(path))["h"] == 0);
    std::remove(path.c_str());
}

TEST_CASE("output does not depend on the worker count") {
    const std::vector<std::vector<std::string>> commands = {
        {"maxlf", "--graph", "H?H_GB@"},
        {"hcn", "--graph", "HG?fbs`", "--format", "table"},
        {"augment", "--graph", "Em|g", "--forest", R"({"paths":[[0,1,2],[3,4,5]]})", "--u", "2", "--v", "3"},
        {"ex", "--n", "10", "--k", "3"},
        {"ex", "--n", "9", "--k", "3", "--strategy", "complete", "--format", "graph6"},
        {"sweep", "--n-range", "6:10", "--k-range", "2:3", "--format", "table"},
    };
    for (const auto& base : commands) {
        std::string first;
        for (const char* w : {"1", "2", "8"}) {
            auto args = base;
            args.push_back("--workers");
            args.push_back(w);
            Run r = cli(args);
            CHECK(r.code == 0);
            if (first.empty()) first = r.out;
            CHECK(r.out == first);
        }
    }
}
