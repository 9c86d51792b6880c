#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/maximality.hpp"

namespace pathcover {

// graph6 string minimal over all vertex relabelings. Two graphs are
// isomorphic iff their canonical forms are equal. Exact branch-and-bound
// over partial labelings with column and interchangeable-vertex pruning;
// capped at 12 vertices.
std::string canonical_form(const Graph& g);

// The relabeled graph whose encoding is canonical_form(g).
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// One representative (canonically labeled) per isomorphism class on exactly
// n vertices, sorted by canonical form. Internal generation is capped at
// n <= 8; larger corpora must be supplied externally as graph6 streams.
// Results are cached process-wide.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);

// Classification filter for catalog construction.
struct CatalogFilter {
    enum class Class { all, maximal, trim };
    Class wanted = Class::all;
    std::optional<int> t;  // restrict to a specific invariant value

    static CatalogFilter parse(const std::string& text);  // "all", "M", "N2", "M1", ...
    std::string describe() const;
};

struct CatalogEntry {
    std::string canonical;
    int n = 0;
    Classification classification;
    std::optional<Decomposition> decomposition;  // present when maximal with t >= 1
};

// Classifies every graph in `source` and keeps those passing the filter.
std::vector<CatalogEntry> build_catalog(const std::vector<Graph>& source,
                                        const CatalogFilter& filter);

}  // namespace pathcover
