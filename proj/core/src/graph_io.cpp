#include "pathcover/graph_io.hpp"

#include <sstream>
#include <vector>

namespace pathcover {

namespace {

constexpr int kOffset = 63;   // printable byte offset
constexpr int kMaxByte = 126;

int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));

    int bits = triangle_bits(n);
    int groups = (bits + 5) / 6;
    std::vector<unsigned char> body(groups, 0);
    int pos = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++pos) {
            if (g.has_edge(u, v)) body[pos / 6] |= 1u << (5 - pos % 6);
        }
    }
    for (unsigned char b : body) out.push_back(static_cast<char>(b + kOffset));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 input", 0);

    unsigned char header = static_cast<unsigned char>(text[0]);
    if (header < kOffset || header > kMaxByte) {
        throw parse_error("graph6 header byte out of range", 0);
    }

    std::size_t body_start = 1;
    long n;
    if (header == kMaxByte) {
        // Extended headers encode orders >= 63, all beyond the size cap.
        // Decode far enough to produce a precise diagnostic.
        std::size_t digits = 3;
        std::size_t at = 1;
        if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxByte) {
            digits = 6;
            at = 2;
        }
        long value = 0;
        for (std::size_t i = 0; i < digits; ++i, ++at) {
            if (at >= text.size()) throw parse_error("truncated graph6 header", text.size());
            unsigned char c = static_cast<unsigned char>(text[at]);
            if (c < kOffset || c > kMaxByte) {
                throw parse_error("graph6 header byte out of range", at);
            }
            value = (value << 6) | (c - kOffset);
        }
        if (value < 63) {
            throw parse_error("non-canonical extended graph6 header", 0);
        }
        n = value;
        body_start = at;
    } else {
        n = header - kOffset;
    }

    if (n < 1 || n > kMaxVertices) {
        throw size_error("graph6 order " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxVertices) + "]");
    }

    int bits = triangle_bits(static_cast<int>(n));
    std::size_t expected = body_start + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < expected) {
        throw parse_error("truncated graph6 bit field", text.size());
    }
    if (text.size() > expected) {
        throw parse_error("trailing bytes after graph6 bit field", expected);
    }

    std::vector<std::uint32_t> adjacency(n, 0);
    int pos = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++pos) {
            std::size_t at = body_start + pos / 6;
            unsigned char c = static_cast<unsigned char>(text[at]);
            if (c < kOffset || c > kMaxByte) {
                throw parse_error("graph6 body byte out of range", at);
            }
            if ((c - kOffset) >> (5 - pos % 6) & 1) {
                adjacency[u] |= 1u << v;
                adjacency[v] |= 1u << u;
            }
        }
    }
    // Padding bits past the triangle must be zero.
    for (int p = bits; p % 6 != 0; ++p) {
        std::size_t at = body_start + p / 6;
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < kOffset || c > kMaxByte) {
            throw parse_error("graph6 body byte out of range", at);
        }
        if ((c - kOffset) >> (5 - p % 6) & 1) {
            throw parse_error("nonzero graph6 padding bits", at);
        }
    }
    return Graph::from_adjacency(static_cast<int>(n), adjacency);
}

std::string to_dot(const Graph& g, const std::map<int, std::string>& labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        auto it = labels.find(v);
        if (it != labels.end()) {
            out << "  " << v << " [label=\"" << it->second << "\"];\n";
        } else {
            out << "  " << v << ";\n";
        }
    }
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) out << "  " << u << " -- " << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace pathcover
