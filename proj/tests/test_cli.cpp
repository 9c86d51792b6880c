#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pathcover/families.hpp"
#include "pathcover/graph_io.hpp"

using namespace pathcover;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Runs the built CLI with shell redirects; stdin is fed from a file so
// pipelines behave exactly as in production use.
CliResult run_cli(const std::string& args, const std::string& stdin_text = {}) {
    static int sequence = 0;
    std::string out_path = "/tmp/pathcover_cli_test_" + std::to_string(getpid()) + "_" +
                           std::to_string(sequence++);
    std::string err_path = out_path + ".err";
    std::string in_path = out_path + ".in";
    {
        std::ofstream in(in_path);
        in << stdin_text;
    }
    std::string command = std::string(PATHCOVER_CLI_PATH) + " " + args + " < " + in_path +
                          " > " + out_path + " 2> " + err_path;
    int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    std::remove(in_path.c_str());
    return result;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) lines += c == '\n';
    return lines;
}

}  // namespace

TEST_CASE("invariants of the net graph") {
    auto result = run_cli("invariants " + to_graph6(named("fig1-net")));
    REQUIRE(result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(result.out);
    CHECK(parsed["mu"] == 2);
    CHECK(parsed["muCheck"] == 2);
    CHECK(parsed["iH"] == 0);
    CHECK(parsed["witness"].size() == 2);
    CHECK(parsed["terminalFeasible"].size() == 6);
}

TEST_CASE("invariants of K2") {
    auto result = run_cli("invariants " + to_graph6(complete_graph(2)));
    REQUIRE(result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(result.out);
    CHECK(parsed["mu"] == 1);
    CHECK(parsed["muCheck"] == 0);
    CHECK(parsed["iH"] == 1);
}

TEST_CASE("garbage input exits 2 with a diagnostic") {
    auto result = run_cli("invariants '##'");
    CHECK(result.exit_code == 2);
    CHECK(result.out.empty());
    CHECK(result.err.find("byte") != std::string::npos);
}

TEST_CASE("classify and decompose") {
    auto classify = run_cli("classify " + to_graph6(whirligig({.t = 3, .m = 5})));
    REQUIRE(classify.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(classify.out);
    CHECK(parsed["inNt"] == true);
    CHECK(parsed["t"] == 3);

    auto decompose = run_cli("decompose " + to_graph6(complete_graph(4)));
    CHECK(decompose.exit_code == 1);
    CHECK(decompose.out.empty());
    CHECK(decompose.err.find("t=0") != std::string::npos);

    auto compose2 = run_cli("decompose " +
                            to_graph6(join(complete_graph(2),
                                           disjoint_union(complete_graph(3), named("fig1-net")))));
    REQUIRE(compose2.exit_code == 0);
    nlohmann::json d = nlohmann::json::parse(compose2.out);
    CHECK(d["s"] == 2);
    CHECK(d["parts"].size() == 2);
}

TEST_CASE("stdin streams produce one json line per graph") {
    std::string input = to_graph6(named("fig1-net")) + "\n" + to_graph6(complete_graph(3)) + "\n";
    auto result = run_cli("classify", input);
    REQUIRE(result.exit_code == 0);
    CHECK(count_lines(result.out) == 2);
}

TEST_CASE("generate") {
    auto whirl = run_cli("generate whirligig --t 3 --m 5");
    REQUIRE(whirl.exit_code == 0);
    CHECK(whirl.out == to_graph6(whirligig({.t = 3, .m = 5})) + "\n");

    auto bad = run_cli("generate whirligig --t 2 --m 2");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("m >= 2t-1") != std::string::npos);

    auto skup = run_cli("generate skupien --r 2 --sizes 1,2,3 --format json");
    REQUIRE(skup.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(skup.out);
    CHECK(parsed["n"] == 8);
    CHECK(parsed["graph6"] == to_graph6(skupien(2, {1, 2, 3})));

    auto dot = run_cli("generate named --name fig1-net --dot");
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.out.find("graph G {") == 0);
    CHECK(dot.out.find("label=\"u1\"") != std::string::npos);

    auto gw = run_cli("generate generalized-whirligig --t 2 --u0 0 "
                      "--groups '[[1,[1]],[1,[1]],[2,[1,1]]]'");
    REQUIRE(gw.exit_code == 0);
    GeneralizedWhirligigSpec spec{.t = 2, .u0_size = 0,
                                  .groups = {{1, {1}}, {1, {1}}, {2, {1, 1}}}};
    CHECK(gw.out == to_graph6(generalized_whirligig(spec)) + "\n");

    CHECK(run_cli("generate nosuch").exit_code == 2);
}

TEST_CASE("enumerate and catalog") {
    auto enumerated = run_cli("enumerate --max-n 4");
    REQUIRE(enumerated.exit_code == 0);
    CHECK(count_lines(enumerated.out) == 1 + 2 + 4 + 11);

    auto connected = run_cli("enumerate --max-n 3 --connected");
    CHECK(count_lines(connected.out) == 1 + 1 + 2);

    auto catalog = run_cli("catalog --max-n 3 --filter M0");
    REQUIRE(catalog.exit_code == 0);
    CHECK(count_lines(catalog.out) == 3);
    std::istringstream lines(catalog.out);
    std::string line;
    while (std::getline(lines, line)) {
        nlohmann::json entry = nlohmann::json::parse(line);
        CHECK(entry["classification"]["t"] == 0);
    }

    CHECK(run_cli("enumerate --max-n 9").exit_code == 2);
    CHECK(run_cli("catalog --max-n 3 --filter X9").exit_code == 2);
}

TEST_CASE("verify campaigns end to end") {
    auto ami = run_cli("verify AMI --max-n 4");
    REQUIRE(ami.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(ami.out);
    CHECK(report["counterexamples"].empty());
    CHECK(report["checked"] == 18);

    auto unknown = run_cli("verify NOPE");
    CHECK(unknown.exit_code == 2);

    // a non-maximal graph fed as an explicit corpus falsifies DECOMP
    auto mutant = run_cli("verify DECOMP --corpus",
                          to_graph6(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) + "\n");
    CHECK(mutant.exit_code == 1);
    nlohmann::json failed = nlohmann::json::parse(mutant.out);
    CHECK(failed["counterexamples"].size() == 1);

    auto listed = run_cli("verify --list");
    REQUIRE(listed.exit_code == 0);
    CHECK(count_lines(listed.out) == 13);
}

TEST_CASE("self round trip: generated output feeds back in") {
    auto piped = run_cli("enumerate --max-n 3");
    auto classified = run_cli("classify", piped.out);
    REQUIRE(classified.exit_code == 0);
    CHECK(count_lines(classified.out) == 7);
}
