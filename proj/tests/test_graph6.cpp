#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "pathcover/families.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/graph_io.hpp"

using namespace pathcover;

namespace {

// Independent re-encoder working on an explicit '0'/'1' bit string, used to
// cross-check the production encoder byte for byte.
std::string bitstring_graph6(const Graph& g) {
    std::string bits;
    for (int v = 1; v < g.order(); ++v) {
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? '1' : '0');
    }
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(63 + g.order()));
    for (std::size_t at = 0; at < bits.size(); at += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + (bits[at + b] == '1');
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

Graph graph_from_bits(int n, unsigned bits) {
    std::vector<std::pair<int, int>> edges;
    int at = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++at) {
            if ((bits >> at) & 1u) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1u) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("fixed encodings") {
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(Graph(2)) == "A?");
    CHECK(to_graph6(complete_graph(2)) == "A_");
}

TEST_CASE("encoder matches the bit-string reference on every small graph") {
    for (int n = 1; n <= 5; ++n) {
        unsigned all = 1u << (n * (n - 1) / 2);
        for (unsigned bits = 0; bits < all; ++bits) {
            Graph g = graph_from_bits(n, bits);
            CHECK(to_graph6(g) == bitstring_graph6(g));
        }
    }
}

TEST_CASE("round trip is lossless") {
    Graph net = named("fig1-net");
    CHECK(from_graph6(to_graph6(net)) == net);

    std::mt19937_64 rng(99);
    for (int n : {6, 12, 17, 24}) {
        for (int trial = 0; trial < 20; ++trial) {
            Graph g = random_graph(n, rng);
            Graph back = from_graph6(to_graph6(g));
            CHECK(back == g);
        }
    }
}

TEST_CASE("decoding canonical bytes is the identity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 10), rng);
        std::string text = to_graph6(g);
        CHECK(to_graph6(from_graph6(text)) == text);
    }
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), parse_error);
    try {
        from_graph6("");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 0);
    }

    // Truncated body: K3 needs one body byte.
    try {
        from_graph6("B");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 1);
    }

    // Trailing bytes after a complete encoding.
    try {
        from_graph6("Bw?");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.byte_offset() == 2);
    }

    // Body byte below the printable range.
    CHECK_THROWS_AS(from_graph6("B:"), parse_error);
    // Nonzero padding bits: n=2 uses one bit, the rest must be zero.
    CHECK_THROWS_AS(from_graph6("AO"), parse_error);
    // Header byte out of range.
    CHECK_THROWS_AS(from_graph6("\x01w"), parse_error);
}

TEST_CASE("orders outside the cap are size errors") {
    CHECK_THROWS_AS(from_graph6("?"), size_error);            // n = 0
    CHECK_THROWS_AS(from_graph6(std::string(1, 'c')), size_error);  // n = 36 > 24, truncated anyway
    CHECK_THROWS_AS(from_graph6("~@??"), size_error);         // extended header, n = 4096
    CHECK_THROWS_AS(from_graph6("~??@"), parse_error);        // extended header for n = 1
}

TEST_CASE("dot output is deterministic and complete") {
    Graph net = named("fig1-net");
    std::string dot = to_dot(net);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("  3 -- 4;") != std::string::npos);
    // one line per vertex plus one per edge plus braces
    int lines = 0;
    for (char c : dot) lines += c == '\n';
    CHECK(lines == 2 + 6 + 6);

    std::string labeled = to_dot(complete_graph(2), {{0, "u1"}});
    CHECK(labeled.find("0 [label=\"u1\"];") != std::string::npos);
    CHECK(labeled.find("  0 -- 1;") != std::string::npos);

    // exactly one edge statement for K2
    std::size_t first = labeled.find("--");
    CHECK(first != std::string::npos);
    CHECK(labeled.find("--", first + 1) == std::string::npos);
}
