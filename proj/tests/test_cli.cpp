#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmlab/cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cmlab::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("classset --disc 11") {
    auto r = run({"classset", "--disc", "11"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["classes"].size() == 2);
    auto w = j["weights"].get<std::vector<int>>();
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<int>{2, 3});
    CHECK(j["mass"]["exact"] == "5/6");
    CHECK(j["mass"]["decimal"] == "0.833333333333");
}

TEST_CASE("bimodule --p 3") {
    auto r = run({"bimodule", "--p", "3"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["admissible"] == true);
    CHECK(j["type"] == json::array({1, 1}));
    CHECK(j["k"] == 4);
}

TEST_CASE("CMLAB_PRECISION sets the default precision") {
    setenv("CMLAB_PRECISION", "6", 1);
    auto r = run({"bimodule", "--p", "5"});
    CHECK(json::parse(r.out)["k"] == 6);
    auto flag = run({"bimodule", "--p", "5", "--k", "5"});
    CHECK(json::parse(flag.out)["k"] == 5);
    setenv("CMLAB_PRECISION", "x", 1);
    CHECK(run({"bimodule", "--p", "5"}).code == kExitValidation);
    unsetenv("CMLAB_PRECISION");
}

TEST_CASE("equidist csv") {
    auto r = run({"equidist", "--p", "3", "--q", "2", "--dK", "-3", "--nmax", "4", "--target", "singular", "--format", "csv"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0].rfind("n,c,h,m_1", 0) == 0);
    CHECK(ls[1].rfind("0,1,1,", 0) == 0);
    CHECK(ls[5].rfind("4,81,27,", 0) == 0);
    CHECK(ls[1].find("0/1,0") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"frobnicate"}).code == kExitValidation);
    CHECK(run({}).code == kExitValidation);
    CHECK(run({"classset"}).code == kExitValidation);
    CHECK(run({"classset", "--disc", "15"}).code == kExitValidation);
    CHECK(run({"model", "--p", "5", "--q", "2", "--dK", "-4"}).code == kExitValidation);
    auto e = run({"equidist", "--p", "3", "--q", "2", "--dK", "-4"});
    CHECK(e.code == kExitValidation);
    CHECK(e.err.find("if and only if v ramifies in K") != std::string::npos);
    CHECK(std::count(e.err.begin(), e.err.end(), '\n') == 1);
    CHECK(run({"tree", "--p", "3", "--output", "/nonexistent-dir/x.json"}).code == kExitIo);
    CHECK(run({"tree", "--p", "3", "--config", "/nonexistent-dir/c.cfg"}).code == kExitIo);
    CHECK(run({"tree", "--p", "3", "--format", "csv"}).code == kExitValidation);
    CHECK(run({"bimodule", "--p", "2"}).code == kExitValidation);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every subcommand has a dry run") {
    std::vector<std::vector<std::string>> cmds{
        {"algebra", "--a", "-1", "--b", "-11"},
        {"classset", "--disc", "11"},
        {"brandt", "--disc", "11", "--n", "2"},
        {"embeddings", "--disc", "11", "--dK", "-11"},
        {"model", "--p", "3", "--q", "2", "--dK", "-3"},
        {"bimodule", "--p", "3"},
        {"tree", "--p", "3"},
        {"equidist", "--p", "3", "--q", "2", "--dK", "-3"},
        {"simul", "--p", "3,5", "--q", "5,7", "--dK", "-3,-15"}};
    for (auto cmd : cmds) {
        cmd.push_back("--dry-run");
        auto r = run(cmd);
        CAPTURE(cmd[0]);
        CHECK(r.code == 0);
        CHECK(r.out.rfind("dry-run ok", 0) == 0);
    }
    CHECK(run({"simul", "--p", "3,3", "--q", "5", "--dK", "-3", "--dry-run"}).code == kExitValidation);
}

TEST_CASE("outputs are byte-identical across runs") {
    for (std::vector<std::string> cmd : {std::vector<std::string>{"model", "--p", "3", "--q", "11", "--dK", "-3"},
                                         std::vector<std::string>{"model", "--p", "3", "--q", "11", "--dK", "-3", "--format", "dot"},
                                         std::vector<std::string>{"tree", "--p", "2", "--radius", "2", "--format", "dot"},
                                         std::vector<std::string>{"embeddings", "--disc", "11", "--dK", "-3", "--c", "2"},
                                         std::vector<std::string>{"brandt", "--disc", "11", "--n", "3", "--format", "csv"}}) {
        auto a = run(cmd), b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json exports") {
    auto alg = json::parse(run({"algebra", "--disc", "11"}).out);
    CHECK(alg["ramification"] == json::array({"inf", 11}));
    auto tree = json::parse(run({"tree", "--p", "3", "--radius", "1"}).out);
    CHECK(tree["vertices"].size() == 5);
    CHECK(tree["edges"].size() == 4);
    auto model = json::parse(run({"model", "--p", "3", "--q", "2", "--dK", "-3"}).out);
    CHECK(model["vertices"].size() == 2);
    CHECK(model["edges"] == json::parse("[[0, 1, 1]]"));
    CHECK(model["brandt_consistent"] == true);
    auto b = json::parse(run({"brandt", "--disc", "11", "--n", "2"}).out);
    CHECK(b["matrix"].size() == 2);
    auto e = json::parse(run({"embeddings", "--disc", "11", "--dK", "-11"}).out);
    CHECK(e["total"] == 1);
    auto cs = json::parse(run({"classset", "--disc", "11", "--brandt", "2,3"}).out);
    CHECK(cs["brandt"].contains("2"));
    CHECK(cs["brandt"].contains("3"));
}

TEST_CASE("dK names a field") {
    auto m = json::parse(run({"model", "--p", "5", "--q", "2", "--dK", "-5"}).out);
    CHECK(m["dK"] == -20);
    CHECK(run({"model", "--p", "5", "--q", "2", "--dK", "-1"}).code == kExitValidation);  // 5 splits in Q(i)
    CHECK(run({"model", "--p", "5", "--q", "2", "--dK", "-12"}).code == kExitValidation);
    CHECK(run({"model", "--p", "5", "--q", "2", "--dK", "5"}).code == kExitValidation);
}

TEST_CASE("config file precedence") {
    auto cfg = temp_file("cmlab_test.cfg");
    {
        std::ofstream f(cfg);
        f << "# experiment\np = 3\nq = 2\ndK = -3\nnmax = 3\nformat = csv\n";
    }
    auto from_file = run({"equidist", "--config", cfg.string()});
    REQUIRE(from_file.code == 0);
    CHECK(lines(from_file.out).size() == 5);
    auto flag_wins = run({"equidist", "--config", cfg.string(), "--nmax", "1"});
    CHECK(lines(flag_wins.out).size() == 3);
    {
        std::ofstream f(cfg);
        f << "p 3\n";
    }
    CHECK(run({"equidist", "--config", cfg.string()}).code == kExitValidation);
    std::filesystem::remove(cfg);

    std::istringstream in("a = 1\n  # note\nb=two # trailing\n");
    auto m = parse_config(in);
    CHECK(m.size() == 2);
    CHECK(m["b"] == "two");
}

TEST_CASE("output file and plot data") {
    auto out = temp_file("cmlab_test_out.json");
    auto plot = temp_file("cmlab_test_plot.csv");
    auto r = run({"equidist", "--p", "3", "--q", "5", "--dK", "-3", "--nmax", "2", "--output", out.string(), "--plot-data", plot.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out);
    auto j = json::parse(f);
    CHECK(j["rows"].size() == 3);
    std::ifstream pf(plot);
    std::stringstream ps;
    ps << pf.rdbuf();
    CHECK(lines(ps.str()).size() == 4);
    std::filesystem::remove(out);
    std::filesystem::remove(plot);
}
