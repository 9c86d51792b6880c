#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "pathcover/campaigns.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/serialize.hpp"

using namespace pathcover;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("registry is fixed and case-insensitive") {
    auto& registry = campaign_registry();
    CHECK(registry.size() == 13);
    CHECK(registry.front().id == "AMI");
    CHECK_NOTHROW(run_campaign("ami", {.max_n = 3}));
    CHECK_THROWS_AS(run_campaign("NOPE"), argument_error);
}

TEST_CASE("small exhaustive campaigns pass") {
    CampaignReport ami = run_campaign("AMI", {.max_n = 4});
    CHECK(ami.passed());
    CHECK(ami.checked == 18);  // 1 + 2 + 4 + 11 classes

    CHECK(run_campaign("ALPHA", {.max_n = 4}).passed());
    CHECK(run_campaign("ORACLE", {.max_n = 5}).passed());
    CHECK(run_campaign("DISJ", {.max_n = 3}).passed());
    CHECK(run_campaign("STAR", {.max_n = 3}).passed());
    CHECK(run_campaign("EDGEADD", {.max_n = 3}).passed());
    CHECK(run_campaign("MAX1", {.max_n = 4}).passed());
    CHECK(run_campaign("COT", {.max_n = 4}).passed());
    CHECK(run_campaign("TERM", {.max_n = 5}).passed());
    CHECK(run_campaign("DECOMP", {.max_n = 5}).passed());
    CHECK(run_campaign("DEGONE", {.max_n = 6}).passed());
}

TEST_CASE("sampled campaigns are deterministic given the seed") {
    CampaignBounds bounds{.seed = 42, .samples = 64};
    CampaignReport first = run_campaign("LEMMY", bounds);
    CampaignReport second = run_campaign("LEMMY", bounds);
    CHECK(first.passed());
    CHECK(first.checked == second.checked);
    CHECK(first.seed == 42);
    CHECK(first.corpus == second.corpus);
}

TEST_CASE("explicit corpora run through the per-graph campaigns") {
    CampaignBounds good{.corpus = {named("fig1-net"), whirligig({.t = 2, .m = 4})}};
    CHECK(run_campaign("DECOMP", good).passed());
    CHECK(run_campaign("TERM", good).passed());
    CHECK(run_campaign("ORACLE", good).passed());

    CampaignBounds pairwise{.corpus = {named("fig1-net")}};
    CHECK_THROWS_AS(run_campaign("DISJ", pairwise), argument_error);
}

TEST_CASE("the harness can fail: non-maximal inputs are counterexamples") {
    CampaignBounds mutant{.corpus = {path_graph(5)}};
    CampaignReport report = run_campaign("DECOMP", mutant);
    CHECK(!report.passed());
    REQUIRE(report.counterexamples.size() == 1);
    CHECK(report.counterexamples[0].inputs.size() == 1);
    CHECK(report.counterexamples[0].context == "decompose");

    CHECK(!run_campaign("TERM", mutant).passed());
}

TEST_CASE("reports serialize to json") {
    CampaignReport report = run_campaign("AMI", {.max_n = 3});
    nlohmann::json parsed = nlohmann::json::parse(to_json(report));
    CHECK(parsed["campaign"] == "AMI");
    CHECK(parsed["checked"] == 7);
    CHECK(parsed["counterexamples"].is_array());
    CHECK(parsed["counterexamples"].empty());
    CHECK(parsed["claim"].is_string());
    CHECK(parsed["seed"].is_null());

    CampaignReport bad = run_campaign("DECOMP", {.corpus = {path_graph(4)}});
    nlohmann::json bad_json = nlohmann::json::parse(to_json(bad));
    REQUIRE(bad_json["counterexamples"].size() == 1);
    CHECK(bad_json["counterexamples"][0]["inputs"].size() == 1);
    CHECK(bad_json["counterexamples"][0]["observed"].is_string());
}
