#include "pathcover/graph.hpp"

#include <bit>
#include <string>

namespace pathcover {

int VertexSet::count() const { return std::popcount(mask); }

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
        out.push_back(std::countr_zero(m));
    }
    return out;
}

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices) {
        throw size_error("graph order " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxVertices) + "]");
    }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
    check_order(n);
    for (const auto& [u, v] : edges) insert_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph Graph::from_adjacency(int n, std::span<const std::uint32_t> adjacency) {
    check_order(n);
    if (static_cast<int>(adjacency.size()) != n) {
        throw argument_error("adjacency has " + std::to_string(adjacency.size()) +
                             " rows, expected " + std::to_string(n));
    }
    Graph g(n);
    std::uint32_t allowed = g.full_mask();
    for (int v = 0; v < n; ++v) {
        if ((adjacency[v] & ~allowed) != 0) {
            throw argument_error("adjacency row " + std::to_string(v) +
                                 " has bits at positions >= n");
        }
        if ((adjacency[v] >> v) & 1u) {
            throw argument_error("loop at vertex " + std::to_string(v));
        }
        g.adj_[v] = adjacency[v];
    }
    for (int v = 0; v < n; ++v) {
        for (std::uint32_t m = g.adj_[v]; m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            if (!((g.adj_[u] >> v) & 1u)) {
                throw argument_error("asymmetric adjacency between " + std::to_string(u) +
                                     " and " + std::to_string(v));
            }
        }
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw argument_error("vertex " + std::to_string(v) + " outside [0, " +
                             std::to_string(n_ - 1) + "]");
    }
}

void Graph::insert_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw argument_error("loop at vertex " + std::to_string(u));
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

std::uint32_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

Graph complete_graph(int n) {
    check_order(n);
    Graph g(n);
    std::vector<std::uint32_t> adjacency(n);
    for (int v = 0; v < n; ++v) adjacency[v] = g.full_mask() & ~(1u << v);
    return Graph::from_adjacency(n, adjacency);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxVertices) {
        throw size_error("disjoint union order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices));
    }
    std::vector<std::uint32_t> adjacency(n, 0);
    for (int v = 0; v < g.order(); ++v) adjacency[v] = g.neighbors(v);
    for (int v = 0; v < h.order(); ++v) {
        adjacency[g.order() + v] = h.neighbors(v) << g.order();
    }
    return Graph::from_adjacency(n, adjacency);
}

Graph join(const Graph& g, const Graph& h) {
    Graph u = disjoint_union(g, h);
    int n = u.order();
    std::uint32_t left = (1u << g.order()) - 1u;
    std::uint32_t right = u.full_mask() & ~left;
    std::vector<std::uint32_t> adjacency(n);
    for (int v = 0; v < n; ++v) {
        adjacency[v] = u.neighbors(v) | (v < g.order() ? right : left);
    }
    return Graph::from_adjacency(n, adjacency);
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<std::uint32_t> adjacency(n);
    for (int v = 0; v < n; ++v) {
        adjacency[v] = g.full_mask() & ~g.neighbors(v) & ~(1u << v);
    }
    return Graph::from_adjacency(n, adjacency);
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) {
        throw argument_error("cannot add loop at vertex " + std::to_string(u));
    }
    if (g.has_edge(u, v)) {
        throw argument_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " already present");
    }
    int n = g.order();
    std::vector<std::uint32_t> adjacency(n);
    for (int w = 0; w < n; ++w) adjacency[w] = g.neighbors(w);
    adjacency[u] |= 1u << v;
    adjacency[v] |= 1u << u;
    return Graph::from_adjacency(n, adjacency);
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == g.order() - 1) out.mask |= 1u << v;
    }
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet keep) {
    if ((keep.mask & ~g.full_mask()) != 0) {
        throw argument_error("vertex set has bits outside the graph");
    }
    std::vector<int> to_original = keep.to_vector();
    int k = static_cast<int>(to_original.size());
    if (k == 0) throw argument_error("induced subgraph on empty vertex set");

    std::array<int, kMaxVertices> to_new{};
    for (int i = 0; i < k; ++i) to_new[to_original[i]] = i;

    std::vector<std::uint32_t> adjacency(k, 0);
    for (int i = 0; i < k; ++i) {
        for (std::uint32_t m = g.neighbors(to_original[i]) & keep.mask; m != 0; m &= m - 1) {
            adjacency[i] |= 1u << to_new[std::countr_zero(m)];
        }
    }
    return {Graph::from_adjacency(k, adjacency), std::move(to_original)};
}

namespace {

std::uint32_t reachable_from(const Graph& g, int start) {
    std::uint32_t seen = 1u << start;
    std::uint32_t frontier = seen;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m != 0; m &= m - 1) {
            next |= g.neighbors(std::countr_zero(m));
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

std::vector<std::pair<Graph, std::vector<int>>> components(const Graph& g) {
    std::vector<std::pair<Graph, std::vector<int>>> out;
    std::uint32_t remaining = g.full_mask();
    while (remaining != 0) {
        int seed = std::countr_zero(remaining);
        std::uint32_t comp = reachable_from(g, seed);
        out.push_back(induced_subgraph(g, VertexSet{comp}));
        remaining &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return reachable_from(g, 0) == g.full_mask();
}

}  // namespace pathcover
