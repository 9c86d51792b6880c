#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "pathcover/enumeration.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/invariants.hpp"
#include "pathcover/maximality.hpp"

using namespace pathcover;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

Graph reversed_labels(const Graph& g) {
    int n = g.order();
    std::vector<std::uint32_t> adjacency(n, 0);
    for (int v = 0; v < n; ++v) {
        for (std::uint32_t m = g.neighbors(v); m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            adjacency[n - 1 - v] |= 1u << (n - 1 - u);
        }
    }
    return Graph::from_adjacency(n, adjacency);
}

}  // namespace

TEST_CASE("classification of the basic examples") {
    Classification k7 = classify(complete_graph(7));
    CHECK(k7.t == 0);
    CHECK(k7.in_m_t);
    CHECK(!k7.in_n_t);

    Classification net = classify(named("fig1-net"));
    CHECK(net.t == 2);
    CHECK(net.in_m_t);
    CHECK(net.connected);
    CHECK(!net.has_universal);
    CHECK(net.in_n_t);

    Classification p5 = classify(path_graph(5));
    CHECK(p5.t == 1);
    CHECK(!p5.in_m_t);  // chords between interior vertices keep mu_check at 1
    CHECK(!p5.in_n_t);

    // incomplete but Hamiltonian: t = 0 without being maximal
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Classification c = classify(c4);
    CHECK(c.t == 0);
    CHECK(!c.in_m_t);
}

TEST_CASE("decompose splits off universal vertices and components") {
    Graph g = compose(2, {complete_graph(3), named("fig1-net")});
    Decomposition d = decompose(g);
    CHECK(d.s == 2);
    CHECK(d.t == 1);
    REQUIRE(d.parts.size() == 2);

    // parts are sorted deterministically; find each kind
    auto complete_part = std::find_if(d.parts.begin(), d.parts.end(), [](const auto& p) {
        return p.kind == PartKind::complete;
    });
    auto trim_part = std::find_if(d.parts.begin(), d.parts.end(), [](const auto& p) {
        return p.kind == PartKind::trim;
    });
    REQUIRE(complete_part != d.parts.end());
    REQUIRE(trim_part != d.parts.end());
    CHECK(complete_part->component == complete_graph(3));
    CHECK(complete_part->t_j == 0);
    CHECK(complete_part->i_h_j == 1);
    CHECK(trim_part->t_j == 2);
    CHECK(trim_part->i_h_j == 0);
    CHECK(isomorphic(trim_part->component, named("fig1-net")));
    CHECK(d.t == 0 + 2 + 1 + 0 - 2);

    // relabeling maps carry part edges back into g
    for (const auto& part : d.parts) {
        for (int a = 0; a < part.component.order(); ++a) {
            for (int b = a + 1; b < part.component.order(); ++b) {
                CHECK(part.component.has_edge(a, b) ==
                      g.has_edge(part.to_original[a], part.to_original[b]));
            }
        }
    }
}

TEST_CASE("decompose on trim graphs returns the graph itself") {
    Decomposition net = decompose(named("fig1-net"));
    CHECK(net.s == 0);
    CHECK(net.t == 2);
    REQUIRE(net.parts.size() == 1);
    CHECK(net.parts[0].kind == PartKind::trim);

    Decomposition whirl = decompose(whirligig({.t = 3, .m = 5}));
    CHECK(whirl.s == 0);
    CHECK(whirl.t == 3);
    REQUIRE(whirl.parts.size() == 1);
    CHECK(whirl.parts[0].t_j == 3);
}

TEST_CASE("decompose rejects non-maximal and complete inputs") {
    CHECK_THROWS_AS(decompose(complete_graph(4)), domain_error);
    CHECK_THROWS_AS(decompose(path_graph(4)), domain_error);
    CHECK_THROWS_WITH_AS(decompose(complete_graph(4)),
                         doctest::Contains("t=0"), domain_error);
}

TEST_CASE("compose") {
    CHECK(compose(0, {complete_graph(3)}) == complete_graph(3));
    CHECK(compose(2, {}) == complete_graph(2));
    CHECK_THROWS_AS(compose(0, {}), argument_error);

    Graph chvatal = compose(1, {named("fig1-net")});
    CHECK(chvatal.order() == 7);
    Classification c = classify(chvatal);
    CHECK(c.t == 1);
    CHECK(c.in_m_t);
    CHECK(c.has_universal);
}

TEST_CASE("predicted mu_check closed form") {
    CHECK(predicted_mu_check(2, {complete_graph(3), named("fig1-net")}) == 1);
    CHECK(predicted_mu_check(5, {complete_graph(2), complete_graph(2)}) == 0);
    CHECK(predicted_mu_check(0, {named("fig1-net"), named("fig1-net")}) == 4);
}

TEST_CASE("compose then decompose is the identity up to isomorphism") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            Classification c = classify(g);
            if (!c.in_m_t || c.t < 1) continue;
            Decomposition d = decompose(g);
            std::vector<Graph> parts;
            for (const auto& part : d.parts) parts.push_back(part.component);
            CHECK(isomorphic(compose(d.s, parts), g));
            CHECK(predicted_mu_check(d.s, parts) == d.t);
        }
    }
}

TEST_CASE("decomposition is label-independent") {
    Graph g = compose(2, {complete_graph(3), named("fig1-net")});
    Graph h = reversed_labels(g);
    Decomposition dg = decompose(g);
    Decomposition dh = decompose(h);
    CHECK(dg.s == dh.s);
    CHECK(dg.t == dh.t);
    REQUIRE(dg.parts.size() == dh.parts.size());
    for (std::size_t i = 0; i < dg.parts.size(); ++i) {
        CHECK(canonical_form(dg.parts[i].component) ==
              canonical_form(dh.parts[i].component));
        CHECK(dg.parts[i].kind == dh.parts[i].kind);
        CHECK(dg.parts[i].t_j == dh.parts[i].t_j);
    }
}
