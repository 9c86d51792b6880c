// Command-line front end: graph6 in, JSON/graph6/DOT out.
// Exit codes: 0 success, 1 domain failure or counterexample found, 2 usage
// error. Machine output goes to stdout only, diagnostics to stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcover/campaigns.hpp"
#include "pathcover/enumeration.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/graph_io.hpp"
#include "pathcover/invariants.hpp"
#include "pathcover/maximality.hpp"
#include "pathcover/serialize.hpp"

namespace {

using pathcover::Graph;

std::string trimmed(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    std::size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

// One graph from the positional argument, or a stream of graphs from stdin.
std::vector<Graph> input_graphs(const std::string& arg) {
    std::vector<Graph> graphs;
    if (!arg.empty()) {
        graphs.push_back(pathcover::from_graph6(arg));
        return graphs;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        std::string text = trimmed(line);
        if (!text.empty()) graphs.push_back(pathcover::from_graph6(text));
    }
    return graphs;
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::size_t at = 0;
    while (at <= text.size()) {
        std::size_t comma = text.find(',', at);
        std::string piece = text.substr(at, comma == std::string::npos ? comma : comma - at);
        if (piece.empty()) throw pathcover::argument_error("empty entry in --sizes");
        sizes.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return sizes;
}

pathcover::GeneralizedWhirligigSpec parse_groups(int t, int u0, const std::string& text) {
    pathcover::GeneralizedWhirligigSpec spec;
    spec.t = t;
    spec.u0_size = u0;
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw pathcover::argument_error(std::string("bad --groups JSON: ") + e.what());
    }
    if (!parsed.is_array()) throw pathcover::argument_error("--groups must be a JSON array");
    for (const auto& entry : parsed) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_array()) {
            throw pathcover::argument_error(
                "--groups entries must look like [u_size, [v_size, ...]]");
        }
        pathcover::GeneralizedWhirligigSpec::Group group;
        group.u_size = entry[0].get<int>();
        for (const auto& v : entry[1]) group.v_sizes.push_back(v.get<int>());
        spec.groups.push_back(std::move(group));
    }
    return spec;
}

struct GenerateOptions {
    std::string family;
    int t = 0;
    int m = 0;
    int r = 0;
    int u0 = 0;
    std::string sizes;
    std::string groups;
    std::string name;
    std::string format = "graph6";
    bool dot = false;
};

int run_generate(const GenerateOptions& opt) {
    Graph g(1);
    std::map<int, std::string> labels;
    if (opt.family == "whirligig") {
        g = pathcover::whirligig({.t = opt.t, .m = opt.m});
    } else if (opt.family == "generalized-whirligig" || opt.family == "gwhirligig") {
        g = pathcover::generalized_whirligig(parse_groups(opt.t, opt.u0, opt.groups));
    } else if (opt.family == "skupien") {
        g = pathcover::skupien(opt.r, parse_sizes(opt.sizes));
    } else if (opt.family == "zelinka1") {
        g = pathcover::zelinka_type1(opt.r, parse_sizes(opt.sizes));
    } else if (opt.family == "named") {
        g = pathcover::named(opt.name);
        labels = pathcover::named_labels(opt.name);
    } else {
        throw pathcover::argument_error(
            "unknown family '" + opt.family +
            "' (known: whirligig, generalized-whirligig, skupien, zelinka1, named)");
    }

    std::string format = opt.dot ? "dot" : opt.format;
    if (format == "graph6") {
        std::cout << pathcover::to_graph6(g) << "\n";
    } else if (format == "dot") {
        std::cout << pathcover::to_dot(g, labels);
    } else if (format == "json") {
        nlohmann::json out{{"family", opt.family},
                           {"graph6", pathcover::to_graph6(g)},
                           {"n", g.order()}};
        std::cout << out.dump() << "\n";
    } else {
        throw pathcover::argument_error("unknown --format '" + format + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact path-cover invariants, maximality classification and "
                 "small-graph verification"};
    app.require_subcommand(1);

    std::string graph_arg;
    GenerateOptions generate;
    int max_n = 0;
    bool connected = false;
    std::string filter_text = "all";
    std::string campaign_id;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<int> campaign_max_n;
    bool corpus_stdin = false;
    bool list_campaigns = false;

    auto* cmd_invariants = app.add_subcommand(
        "invariants", "mu, mu_check, i_H, terminal-feasible set and a witness cover");
    cmd_invariants->add_option("graph6", graph_arg, "graph6 text (default: stdin stream)");

    auto* cmd_classify =
        app.add_subcommand("classify", "membership in the maximal families M_t / N_t");
    cmd_classify->add_option("graph6", graph_arg, "graph6 text (default: stdin stream)");

    auto* cmd_decompose = app.add_subcommand(
        "decompose", "split a maximal graph into K_s joined with complete or trim parts");
    cmd_decompose->add_option("graph6", graph_arg, "graph6 text (default: stdin stream)");

    auto* cmd_generate = app.add_subcommand("generate", "emit a parameterized family member");
    cmd_generate->add_option("family", generate.family,
                             "whirligig | generalized-whirligig | skupien | zelinka1 | named")
        ->required();
    cmd_generate->add_option("--t", generate.t, "target invariant");
    cmd_generate->add_option("--m", generate.m, "whirligig clique size");
    cmd_generate->add_option("--r", generate.r, "clique-join parameter");
    cmd_generate->add_option("--u0", generate.u0, "|U_0| for generalized-whirligig");
    cmd_generate->add_option("--sizes", generate.sizes, "comma-separated part sizes");
    cmd_generate->add_option("--groups", generate.groups,
                             "JSON [[u_size,[v_size,...]],...] for generalized-whirligig");
    cmd_generate->add_option("--name", generate.name, "named graph identifier");
    cmd_generate->add_option("--format", generate.format, "graph6 | dot | json");
    cmd_generate->add_flag("--dot", generate.dot, "shorthand for --format dot");

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "stream all graphs up to isomorphism, one per line");
    cmd_enumerate->add_option("--max-n", max_n, "largest order to enumerate")->required();
    cmd_enumerate->add_flag("--connected", connected, "connected graphs only");

    auto* cmd_catalog =
        app.add_subcommand("catalog", "classify enumerated graphs into JSON lines");
    cmd_catalog->add_option("--max-n", max_n, "largest order to enumerate")->required();
    cmd_catalog->add_option("--filter", filter_text, "all | M[t] | N[t]");
    cmd_catalog->add_flag("--connected", connected, "connected graphs only");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification campaign");
    cmd_verify->add_option("campaign", campaign_id, "campaign identifier");
    cmd_verify->add_option("--max-n", campaign_max_n, "corpus order bound override");
    cmd_verify->add_option("--seed", seed, "seed for sampled corpora");
    cmd_verify->add_option("--samples", samples, "sample count for sampled corpora");
    cmd_verify->add_flag("--corpus", corpus_stdin, "read an explicit graph6 corpus from stdin");
    cmd_verify->add_flag("--list", list_campaigns, "list campaign identifiers and claims");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_invariants->parsed()) {
            for (const Graph& g : input_graphs(graph_arg)) {
                std::cout << pathcover::to_json(g, pathcover::analyze(g)) << "\n";
            }
        } else if (cmd_classify->parsed()) {
            for (const Graph& g : input_graphs(graph_arg)) {
                std::cout << pathcover::to_json(g, pathcover::classify(g)) << "\n";
            }
        } else if (cmd_decompose->parsed()) {
            for (const Graph& g : input_graphs(graph_arg)) {
                std::cout << pathcover::to_json(g, pathcover::decompose(g)) << "\n";
            }
        } else if (cmd_generate->parsed()) {
            return run_generate(generate);
        } else if (cmd_enumerate->parsed()) {
            for (int n = 1; n <= max_n; ++n) {
                for (const Graph& g : pathcover::enumerate_graphs(n, connected)) {
                    std::cout << pathcover::to_graph6(g) << "\n";
                }
            }
        } else if (cmd_catalog->parsed()) {
            auto filter = pathcover::CatalogFilter::parse(filter_text);
            std::vector<Graph> graphs;
            for (int n = 1; n <= max_n; ++n) {
                for (const Graph& g : pathcover::enumerate_graphs(n, connected)) {
                    graphs.push_back(g);
                }
            }
            for (const auto& entry : pathcover::build_catalog(graphs, filter)) {
                std::cout << pathcover::to_json(entry) << "\n";
            }
        } else if (cmd_verify->parsed()) {
            if (list_campaigns) {
                for (const auto& info : pathcover::campaign_registry()) {
                    nlohmann::json line{{"campaign", info.id}, {"claim", info.claim}};
                    std::cout << line.dump() << "\n";
                }
                return 0;
            }
            if (campaign_id.empty()) {
                throw pathcover::argument_error("verify needs a campaign identifier");
            }
            pathcover::CampaignBounds bounds;
            bounds.max_n = campaign_max_n;
            bounds.seed = seed;
            bounds.samples = samples;
            if (corpus_stdin) bounds.corpus = input_graphs("");
            auto report = pathcover::run_campaign(campaign_id, bounds);
            std::cout << pathcover::to_json(report) << "\n";
            if (!report.passed()) {
                std::cerr << "verify " << report.campaign << ": "
                          << report.counterexamples.size() << " counterexample(s) in "
                          << report.checked << " checks\n";
                return 1;
            }
            std::cerr << "verify " << report.campaign << ": " << report.checked
                      << " checks passed\n";
        }
    } catch (const pathcover::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const pathcover::internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const pathcover::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
