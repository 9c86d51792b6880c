#pragma once

#include <map>
#include <string>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Clique K_m with pendant vertices v_1..v_{2t-1} attached to distinct
// clique vertices. The standard trim maximal t-path traceable example.
struct WhirligigSpec {
    int t = 0;  // target invariant, >= 1
    int m = 0;  // clique size, >= 2t-1
};

// General construction: a clique U = U_0 u U_1 u ... u U_{2t-1}, and for
// each i >= 1 exactly |U_i| further cliques V_{i,1}..V_{i,|U_i|}, each
// fully joined to U_i and to nothing else.
struct GeneralizedWhirligigSpec {
    struct Group {
        int u_size = 0;              // |U_i| >= 1
        std::vector<int> v_sizes;    // exactly u_size entries, each >= 1
    };
    int t = 0;                       // >= 1
    int u0_size = 0;                 // |U_0| >= 0
    std::vector<Group> groups;       // exactly 2t-1 entries
};

// Vertex labels follow the block order U_0, U_1, ..., U_{2t-1}, then the
// V sets in (i, j) lexicographic order.
Graph whirligig(const WhirligigSpec& spec);
Graph generalized_whirligig(const GeneralizedWhirligigSpec& spec);

// join(K_r, disjoint union of r+1 complete graphs): the classic maximal
// non-Hamiltonian family. `sizes` has r+1 entries, each >= 1.
Graph skupien(int r, const std::vector<int>& sizes);

// join(K_{r-1}, disjoint union of r+1 complete graphs): maximal
// non-traceable. r >= 1; r = 1 degenerates to a plain disjoint union.
Graph zelinka_type1(int r, const std::vector<int>& sizes);

// Fixed example graphs transcribed from their published drawings:
// "fig1-net", "fig2-a3core", "fig3-whirligig".
Graph named(const std::string& name);
std::vector<std::string> named_graphs();

// Display names of the vertices of named(name), for DOT output.
std::map<int, std::string> named_labels(const std::string& name);

}  // namespace pathcover
