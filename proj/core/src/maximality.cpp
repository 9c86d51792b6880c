#include "pathcover/maximality.hpp"

#include <algorithm>
#include <atomic>
#include <tuple>

#include "pathcover/enumeration.hpp"
#include "pathcover/graph_io.hpp"
#include "pathcover/parallel.hpp"

namespace pathcover {

namespace {

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

// Maximality: every missing edge, once added, must lower mu_check.
bool is_maximal(const Graph& g, int t, const std::vector<std::pair<int, int>>& missing) {
    if (missing.empty()) return true;  // complete graphs, vacuously
    if (g.order() <= 10) {
        for (const auto& [u, v] : missing) {
            if (mu_check(add_edge(g, u, v)) >= t) return false;
        }
        return true;
    }
    // Larger graphs: the per-edge checks dominate, spread them over workers.
    std::atomic<bool> maximal{true};
    parallel_for(missing.size(), [&](std::size_t i) {
        if (!maximal.load(std::memory_order_relaxed)) return;
        const auto& [u, v] = missing[i];
        if (mu_check(add_edge(g, u, v)) >= t) {
            maximal.store(false, std::memory_order_relaxed);
        }
    });
    return maximal.load();
}

}  // namespace

Classification classify(const Graph& g) {
    Classification c;
    c.t = mu_check(g);
    c.connected = is_connected(g);
    c.has_universal = !universal_vertices(g).empty();
    c.in_m_t = is_maximal(g, c.t, non_edges(g));
    c.in_n_t = c.in_m_t && c.connected && !c.has_universal && c.t >= 1;
    return c;
}

namespace {

// Deterministic part order. Canonical labeling is exact up to 12 vertices;
// larger parts fall back to their as-extracted encoding, still a pure
// function of the input graph's labeling.
std::tuple<int, int, std::string> part_sort_key(const Graph& component) {
    if (component.order() <= 12) {
        return {component.order(), 0, canonical_form(component)};
    }
    return {component.order(), 1, to_graph6(component)};
}

}  // namespace

Decomposition decompose(const Graph& g) {
    Classification c = classify(g);
    if (!c.in_m_t) {
        throw domain_error("not maximal: some missing edge does not lower mu_check");
    }
    if (c.t == 0) {
        throw domain_error("t=0: complete graphs have no nontrivial decomposition");
    }

    VertexSet universal = universal_vertices(g);
    Decomposition d;
    d.s = universal.count();
    d.t = c.t;

    // t >= 1 rules out complete graphs, so stripping the universal vertices
    // leaves a nonempty remainder.
    auto [rest, rest_map] = induced_subgraph(g, VertexSet{g.full_mask() & ~universal.mask});

    int sum = 0;
    for (auto& [component, comp_map] : components(rest)) {
        DecompositionPart part{.component = component,
                               .kind = PartKind::complete,
                               .t_j = 0,
                               .i_h_j = i_h(component),
                               .to_original = {}};
        part.to_original.reserve(comp_map.size());
        for (int local : comp_map) part.to_original.push_back(rest_map[local]);

        int k = component.order();
        if (component.edge_count() != k * (k - 1) / 2) {
            Classification pc = classify(component);
            if (!pc.in_n_t) {
                throw internal_error("decomposition part is neither complete nor trim maximal");
            }
            part.kind = PartKind::trim;
            part.t_j = pc.t;
        }
        sum += part.t_j + part.i_h_j;
        d.parts.push_back(std::move(part));
    }

    if (d.t != sum - d.s) {
        throw internal_error("decomposition invariants do not sum to t");
    }

    std::stable_sort(d.parts.begin(), d.parts.end(),
                     [](const DecompositionPart& a, const DecompositionPart& b) {
                         return part_sort_key(a.component) < part_sort_key(b.component);
                     });
    return d;
}

Graph compose(int s, const std::vector<Graph>& parts) {
    if (parts.empty()) {
        if (s < 1) throw argument_error("compose needs a clique block or at least one part");
        return complete_graph(s);
    }
    Graph acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, parts[i]);
    return s == 0 ? acc : join(complete_graph(s), acc);
}

int predicted_mu_check(int s, const std::vector<Graph>& parts) {
    int sum = 0;
    for (const Graph& part : parts) sum += mu_check(part) + i_h(part);
    return std::max(0, sum - s);
}

}  // namespace pathcover
