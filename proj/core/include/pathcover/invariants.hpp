#pragma once

#include <utility>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Ordered list of vertex-disjoint paths covering every vertex of a graph.
// Each path is a vertex sequence; a single vertex is a valid length-0 path
// whose two endpoints are itself.
struct PathCover {
    std::vector<std::vector<int>> paths;

    // Disjointness, full coverage, and adjacency of consecutive vertices.
    bool validates_against(const Graph& g) const;

    friend bool operator==(const PathCover&, const PathCover&) = default;
};

// Whether the two families to join with when computing mu_check by its
// defining search are cliques or edgeless graphs.
enum class JoinMode { clique, independent };

// Hamiltonicity. K_1 and K_2 count as Hamiltonian by convention; for
// n >= 3 a Hamiltonian cycle is searched exactly (subset dynamic program
// over (visited set, current vertex), anchored at vertex 0).
bool is_hamiltonian(const Graph& g);

// Indicator form of is_hamiltonian.
int i_h(const Graph& g);

// Minimum number of vertex-disjoint paths covering V(G), with a witness
// cover attaining it. Exact subset dynamic program over
// (covered set, endpoint of the open path); the witness is reconstructed
// by deterministic backtracking and presented canonically (each path
// oriented with its smaller endpoint first, paths sorted by first vertex).
std::pair<int, PathCover> mu(const Graph& g);

// Value-only variant of mu.
int mu_value(const Graph& g);

// mu(g) - i_h(g): the least l such that joining a graph on l extra
// vertices to g yields a Hamiltonian graph.
int mu_check(const Graph& g);

// mu_check by its defining search: smallest l >= 0 such that the join of
// B_l with g is Hamiltonian, where B_l is K_l (clique mode) or the
// edgeless graph on l vertices (independent mode). Throws size_error if
// the search would exceed the vertex cap.
int mu_check_direct(const Graph& g, JoinMode mode);

// True iff some minimum path cover has v as the endpoint of one of its
// paths. Computed exactly by re-running the cover dynamic program with v
// restricted to be a path endpoint.
bool terminal_feasible(const Graph& g, int v);

// True iff some minimum path cover has both v and w as path endpoints
// (possibly of the same path). v != w.
bool pair_terminal_feasible(const Graph& g, int v, int w);

// Independent oracle for mu: exhaustive recursion over all partitions of
// V(G) into paths. No state shared with the dynamic program. n <= 10.
int brute_mu(const Graph& g);

// Full invariant bundle for one graph.
struct InvariantReport {
    int mu = 0;
    int mu_check = 0;
    int i_h = 0;
    VertexSet terminal_feasible;  // {v : v ends a path in some minimum cover}
    PathCover witness;            // exactly `mu` paths, validates against the graph
};

InvariantReport analyze(const Graph& g);

}  // namespace pathcover
