#pragma once

#include <map>
#include <string>
#include <string_view>

#include "pathcover/graph.hpp"

namespace pathcover {

// graph6 text form: header byte n+63, then the upper triangle of the
// adjacency matrix in column order (x01, x02, x12, x03, ...), packed
// big-endian into 6-bit groups offset by 63.
std::string to_graph6(const Graph& g);

// Strict decoder: rejects malformed headers, truncated or oversized bit
// fields, out-of-range bytes and nonzero padding, reporting the byte offset.
Graph from_graph6(std::string_view text);

// DOT text with one node line per vertex and one edge line per edge,
// ascending vertex then ascending neighbor. `labels` optionally renames
// vertices for display.
std::string to_dot(const Graph& g, const std::map<int, std::string>& labels = {});

}  // namespace pathcover
