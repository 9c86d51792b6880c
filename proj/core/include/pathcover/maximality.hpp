#pragma once

#include <string>
#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/invariants.hpp"

namespace pathcover {

// Membership data for the maximal t-path traceable family M_t and its trim
// subfamily N_t (connected, no universal vertex).
struct Classification {
    int t = 0;                  // mu_check of the graph
    bool in_m_t = false;        // adding any missing edge drops mu_check below t
    bool connected = false;
    bool has_universal = false;
    bool in_n_t = false;        // in_m_t && connected && !has_universal && t >= 1
};

enum class PartKind { complete, trim };

// One component of the unique decomposition of a maximal graph.
struct DecompositionPart {
    Graph component;
    PartKind kind;
    int t_j = 0;          // mu_check of the component (0 for complete parts)
    int i_h_j = 0;
    std::vector<int> to_original;  // component label -> label in the input graph
};

// A maximal graph written as the join of K_s with the disjoint union of
// parts that are each complete or trim maximal. Satisfies
// t = sum(t_j) + sum(i_h_j) - s.
struct Decomposition {
    int s = 0;  // number of universal vertices
    std::vector<DecompositionPart> parts;
    int t = 0;
};

// Computes t = mu_check(g) and tests maximality by evaluating mu_check on
// every single-edge extension (vacuously maximal for complete graphs).
Classification classify(const Graph& g);

// Splits a maximal graph with t >= 1 into its universal vertices and the
// components of the rest, verifying that every part is complete or trim
// maximal and that the invariant-sum formula holds. Parts are ordered by
// a deterministic structural key. Throws domain_error when the input is
// not maximal or has t = 0, internal_error when a part fails verification.
Decomposition decompose(const Graph& g);

// join(K_s, disjoint union of parts), clique block first then the parts in
// the given order. With s = 0 this is the plain disjoint union.
Graph compose(int s, const std::vector<Graph>& parts);

// Closed-form mu_check of compose(s, parts) from the parts' invariants:
// max(0, sum mu_check(part) + sum i_h(part) - s).
int predicted_mu_check(int s, const std::vector<Graph>& parts);

}  // namespace pathcover
