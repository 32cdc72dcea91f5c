#include "doctest.h"

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    args.insert(args.begin(), "csp");
    const int code = csp::cli::main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) {
    return std::string(CSP_SOURCE_DIR) + "/samples/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) {
    return slurp(std::string(CSP_SOURCE_DIR) + "/tests/golden/" + name);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
    CHECK(invoke({"dot", sample("pred.csp"), "p"}).out == golden("pred.dot"));
    CHECK(invoke({"dot", sample("add.csp"), "add"}).out == golden("add.dot"));
    CHECK(invoke({"run", sample("add.csp"), "add", "--init", "(2,3)", "--format", "json"}).out ==
          golden("add_trace.json"));
    CHECK(invoke({"matrix", sample("pred.csp"), "p"}).out == golden("pred_matrix.txt"));
}

TEST_CASE("DOT output is well formed") {
    const std::regex header(R"(digraph "[A-Za-z_][A-Za-z0-9_]*" \{)");
    const std::regex node(R"(  u[0-9]+ \[label="[^"]*"(, xlabel="[^"]*")?\];)");
    const std::regex edge(R"(  u[0-9]+ -> u[0-9]+ \[label="[^"]*"\];)");
    const std::vector<std::pair<std::string, std::string>> cases{
        {"pred.csp", "p"}, {"add.csp", "add"}, {"id.csp", "i"}, {"sync.csp", "P"}, {"sync.csp", "pq"}};
    for (const auto& [file, name] : cases) {
        const Result r = invoke({"dot", sample(file), name});
        REQUIRE(r.code == 0);
        std::istringstream lines(r.out);
        std::string line;
        std::vector<std::string> all;
        while (std::getline(lines, line)) {
            all.push_back(line);
        }
        REQUIRE(all.size() >= 3);
        CHECK(std::regex_match(all.front(), header));
        CHECK(all[1] == "  node [shape=box];");
        CHECK(all.back() == "}");
        for (std::size_t i = 2; i + 1 < all.size(); ++i) {
            const bool ok = std::regex_match(all[i], node) || std::regex_match(all[i], edge);
            CHECK_MESSAGE(ok, all[i]);
        }
    }
    const Result id = invoke({"dot", sample("id.csp"), "i"});
    CHECK(id.out.find("u1 [") != std::string::npos);
    CHECK(id.out.find("u2") == std::string::npos);
    CHECK(id.out.find("->") == std::string::npos);
}

TEST_CASE("generator names resolve without a definition") {
    const Result r = invoke({"matrix", sample("pred.csp"), "pred", "eps", "eps"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("pred || N | N          N 1\n", 0) == 0);
    CHECK(r.out.find("pred_{N,1}") != std::string::npos);
}

TEST_CASE("check lists every definition") {
    const Result r = invoke({"check", sample("sync.csp")});
    CHECK(r.code == 0);
    CHECK(r.out == "P: left {eps}, right {eps, a}, top [N], bottom []\n"
                   "Q: left {eps, a}, right {eps}, top [N], bottom []\n"
                   "pq: left {eps}, right {eps}, top [N*N], bottom []\n");
    CHECK(invoke({"check", sample("add.csp"), "add", "--format", "json"}).out.find("\"top\"") != std::string::npos);
}

TEST_CASE("run text output") {
    const Result r = invoke({"run", sample("add.csp"), "add", "--init", "(2,3)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("halted after 5 steps\nbottom[1] = 5\n") != std::string::npos);
    const Result nd = invoke({"run", sample("sync.csp"), "pq", "--init", "(0,0)"});
    CHECK(nd.code == 1);
    CHECK(nd.err.rfind("error: ", 0) == 0);
    CHECK(invoke({"run", sample("sync.csp"), "pq", "--init", "(0,0)", "--policy", "first", "--max-steps", "4"}).code ==
          0);
}

TEST_CASE("diagnostics") {
    const Result bad = invoke({"run", sample("add.csp"), "add", "--init", "(2,"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("--init \"(2,\"") != std::string::npos);
    const Result missing = invoke({"check", sample("nope.csp")});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot open") != std::string::npos);
    const Result unknown = invoke({"dot", sample("add.csp"), "nothing"});
    CHECK(unknown.code == 1);
    CHECK(invoke({}).code != 0);

    const auto dir = std::filesystem::temp_directory_path() / "csp_cli_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "broken.csp";
    std::ofstream(file) << "def x = id(N)\ndef y = pred ; id(N)\n";
    const Result glue = invoke({"check", file.string()});
    CHECK(glue.code == 1);
    CHECK(glue.err.rfind("error: " + file.string() + ":2:14: ", 0) == 0);
    std::ofstream(file) << "def x = id(N\n";
    const Result syntax = invoke({"check", file.string()});
    CHECK(syntax.err.rfind("error: " + file.string() + ":1:11: unclosed", 0) == 0);
}

TEST_CASE("colour is opt-in") {
    setenv("CSP_COLOR", "1", 1);
    const Result red = invoke({"check", sample("nope.csp")});
    setenv("CSP_COLOR", "0", 1);
    const Result plain = invoke({"check", sample("nope.csp")});
    unsetenv("CSP_COLOR");
    CHECK(red.err.rfind("\x1b[1;31merror\x1b[0m: ", 0) == 0);
    CHECK(plain.err.rfind("error: ", 0) == 0);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "csp_cli_out.dot";
    std::filesystem::remove(path);
    const Result r = invoke({"dot", sample("pred.csp"), "p", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path.string()) == golden("pred.dot"));
}

TEST_CASE("reach") {
    const Result text = invoke({"reach", sample("add.csp"), "add", "--nat-bound", "2", "--depth", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("visited: 18\n") != std::string::npos);
    const Result json = invoke({"reach", sample("add.csp"), "add", "--nat-bound", "2", "--format", "json"});
    CHECK(json.out.rfind("{\n  \"natBound\": 2,", 0) == 0);
}

TEST_CASE("oracle") {
    const Result par = invoke({"oracle", sample("sync.csp"), "pq", "--nat-bound", "3"});
    CHECK(par.code == 0);
    CHECK(par.out.find("isomorphic at nat bound 3 (144 states, 126 transitions)") != std::string::npos);
    const Result seq = invoke({"oracle", sample("add.csp"), "add", "--nat-bound", "2"});
    CHECK(seq.code == 0);
    CHECK(seq.out.find(": isomorphic") != std::string::npos);
    const Result guard = invoke({"oracle", sample("sync.csp"), "pq", "--nat-bound", "3", "--max-states", "10"});
    CHECK(guard.code == 1);
    CHECK(invoke({"oracle", sample("pred.csp"), "p"}).code == 1);
}

}
