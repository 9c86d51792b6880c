#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathcover/errors.hpp"

namespace pathcover {

inline constexpr int kMaxVertices = 24;

// Subset of the vertices 0..n-1 of some graph, stored as a bit mask.
struct VertexSet {
    std::uint32_t mask = 0;

    bool contains(int v) const { return (mask >> v) & 1u; }
    int count() const;
    bool empty() const { return mask == 0; }
    std::vector<int> to_vector() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Immutable simple undirected graph on labeled vertices 0..n-1.
// Adjacency is kept as one bit mask per vertex; construction validates
// symmetry, absence of loops, and that no bit at position >= n is set.
class Graph {
public:
    // Edgeless graph on n vertices. 1 <= n <= kMaxVertices.
    explicit Graph(int n);

    // Graph from an explicit edge list. Duplicate edges are tolerated,
    // loops are rejected.
    Graph(int n, std::span<const std::pair<int, int>> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    // Builds from raw adjacency masks, validating every invariant.
    static Graph from_adjacency(int n, std::span<const std::uint32_t> adjacency);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    std::uint32_t neighbors(int v) const;
    int degree(int v) const;

    // Mask with bits 0..n-1 set.
    std::uint32_t full_mask() const { return n_ == 32 ? ~0u : ((1u << n_) - 1u); }

    // Labeled equality (same order, same edge set).
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::array<std::uint32_t, kMaxVertices> adj_{};

    void check_vertex(int v) const;
    void insert_edge(int u, int v);
};

// K_n.
Graph complete_graph(int n);

// Vertices of G keep their labels, vertices of H are shifted by |V(G)|.
// No cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

// disjoint_union(g, h) plus every edge between the two blocks.
Graph join(const Graph& g, const Graph& h);

// uv is an edge of the result iff u != v and uv is not an edge of g.
Graph complement(const Graph& g);

// g plus the single edge uv. Rejects u == v and existing edges.
Graph add_edge(const Graph& g, int u, int v);

// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

// Induced subgraph on the vertices of `keep`, relabeled 0..k-1 in ascending
// original order. Second element maps new labels to original ones.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet keep);

// Connected components as induced subgraphs with their relabeling maps,
// ordered by smallest original vertex label.
std::vector<std::pair<Graph, std::vector<int>>> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace pathcover
