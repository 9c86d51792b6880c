#include "pathcover/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_set>

#include "pathcover/graph_io.hpp"
#include "pathcover/parallel.hpp"

namespace pathcover {

namespace {

constexpr int kCanonicalCap = 12;
constexpr int kEnumerationCap = 8;

// Minimizes the adjacency columns (x_{0v}, ..., x_{v-1,v} read as a
// big-endian integer, one column per label v) over all labelings, which is
// the same order graph6 strings compare in. Labels are assigned one at a
// time; each level fixes one column, so a branch whose column exceeds the
// best labeling's column at that level cannot win and is cut.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        // Vertices with identical neighborhoods away from each other are
        // swapped by an automorphism; trying one per level suffices.
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                if ((g.neighbors(a) & ~(1u << b)) == (g.neighbors(b) & ~(1u << a))) {
                    interchangeable_[a] |= 1u << b;
                }
            }
        }
    }

    std::vector<int> run() {
        best_.assign(n_, ~0u);  // sentinel above any real column
        current_.assign(n_, 0);
        labeled_.assign(n_, -1);
        best_map_.clear();
        descend(0, 0, true);
        return best_map_;
    }

private:
    // `tight`: the columns fixed so far equal the best labeling's prefix.
    // Non-tight branches are strictly smaller and always run down to a leaf,
    // where they replace the best labeling.
    void descend(int level, std::uint32_t used, bool tight) {
        if (level == n_) {
            best_ = current_;
            best_map_ = labeled_;
            return;
        }

        std::array<std::pair<std::uint32_t, int>, kMaxVertices> order;
        int count = 0;
        std::uint32_t candidates = ((1u << n_) - 1u) & ~used;
        std::uint32_t tried = 0;
        for (std::uint32_t m = candidates; m != 0; m &= m - 1) {
            int cand = std::countr_zero(m);
            if ((interchangeable_[cand] & tried) != 0) continue;
            tried |= 1u << cand;
            std::uint32_t column = 0;
            for (int u = 0; u < level; ++u) {
                column = (column << 1) | ((g_.neighbors(cand) >> labeled_[u]) & 1u);
            }
            order[count++] = {column, cand};
        }
        std::sort(order.begin(), order.begin() + count);

        for (int i = 0; i < count; ++i) {
            auto [column, cand] = order[i];
            bool child_tight = false;
            if (tight) {
                // best_[level] only shrinks to columns already tried here,
                // so the sorted remainder can be cut at first excess.
                if (column > best_[level]) break;
                child_tight = column == best_[level];
            }
            current_[level] = column;
            labeled_[level] = cand;
            descend(level + 1, used | (1u << cand), child_tight);
            tight = true;  // best now agrees with this prefix
        }
    }

    const Graph& g_;
    int n_;
    std::array<std::uint32_t, kMaxVertices> interchangeable_{};
    std::vector<std::uint32_t> best_;   // per-level columns of the best labeling
    std::vector<std::uint32_t> current_;
    std::vector<int> labeled_;          // level -> original vertex
    std::vector<int> best_map_;
};

Graph relabel(const Graph& g, const std::vector<int>& level_to_original) {
    int n = g.order();
    std::array<int, kMaxVertices> new_label{};
    for (int level = 0; level < n; ++level) new_label[level_to_original[level]] = level;
    std::vector<std::uint32_t> adjacency(n, 0);
    for (int v = 0; v < n; ++v) {
        for (std::uint32_t m = g.neighbors(v); m != 0; m &= m - 1) {
            adjacency[new_label[v]] |= 1u << new_label[std::countr_zero(m)];
        }
    }
    return Graph::from_adjacency(n, adjacency);
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    if (g.order() > kCanonicalCap) {
        throw size_error("canonical labeling capped at " + std::to_string(kCanonicalCap) +
                         " vertices, got " + std::to_string(g.order()));
    }
    if (g.order() == 1) return g;
    return relabel(g, CanonicalSearch(g).run());
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

std::mutex cache_mutex;

// Every isomorphism class on n vertices arises from one on n-1 vertices by
// appending a vertex with some neighborhood; canonical deduplication keeps
// one representative per class. Levels are built on demand and cached.
std::vector<Graph> all_classes(int n) {
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (!cache.count(1)) cache[1] = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        if (cache.count(k)) continue;
        std::unordered_set<std::string> seen;
        std::vector<Graph> out;
        for (const Graph& base : cache[k - 1]) {
            std::vector<std::uint32_t> adjacency(k, 0);
            for (std::uint32_t attach = 0; attach < (1u << (k - 1)); ++attach) {
                for (int v = 0; v < k - 1; ++v) {
                    adjacency[v] = base.neighbors(v) | (((attach >> v) & 1u) << (k - 1));
                }
                adjacency[k - 1] = attach;
                Graph canon = canonical_graph(Graph::from_adjacency(k, adjacency));
                if (seen.insert(to_graph6(canon)).second) out.push_back(canon);
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
        cache[k] = std::move(out);
    }
    return cache[n];
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > kEnumerationCap) {
        throw size_error("internal enumeration covers 1 <= n <= " +
                         std::to_string(kEnumerationCap) +
                         "; supply larger corpora as graph6 streams");
    }
    std::vector<Graph> out = all_classes(n);
    if (connected_only) {
        std::erase_if(out, [](const Graph& g) { return !is_connected(g); });
    }
    return out;
}

CatalogFilter CatalogFilter::parse(const std::string& text) {
    CatalogFilter filter;
    if (text.empty() || text == "all") return filter;
    char cls = text[0];
    if (cls == 'M' || cls == 'm') {
        filter.wanted = Class::maximal;
    } else if (cls == 'N' || cls == 'n') {
        filter.wanted = Class::trim;
    } else {
        throw argument_error("bad catalog filter '" + text + "' (want all, M[t] or N[t])");
    }
    if (text.size() > 1) {
        try {
            std::size_t used = 0;
            int t = std::stoi(text.substr(1), &used);
            if (used + 1 != text.size() || t < 0) throw std::invalid_argument(text);
            filter.t = t;
        } catch (const std::exception&) {
            throw argument_error("bad catalog filter '" + text + "'");
        }
    }
    return filter;
}

std::string CatalogFilter::describe() const {
    std::string suffix = t ? std::to_string(*t) : std::string("t");
    switch (wanted) {
        case Class::maximal: return "M_" + suffix;
        case Class::trim: return "N_" + suffix;
        default: return "all";
    }
}

std::vector<CatalogEntry> build_catalog(const std::vector<Graph>& source,
                                        const CatalogFilter& filter) {
    std::vector<std::optional<CatalogEntry>> slots(source.size());
    parallel_for(source.size(), [&](std::size_t i) {
        const Graph& g = source[i];
        try {
            Classification c = classify(g);
            bool keep = true;
            switch (filter.wanted) {
                case CatalogFilter::Class::maximal: keep = c.in_m_t; break;
                case CatalogFilter::Class::trim: keep = c.in_n_t; break;
                case CatalogFilter::Class::all: break;
            }
            if (keep && filter.t && c.t != *filter.t) keep = false;
            if (!keep) return;
            CatalogEntry entry{.canonical = canonical_form(g),
                               .n = g.order(),
                               .classification = c,
                               .decomposition = std::nullopt};
            if (c.in_m_t && c.t >= 1) entry.decomposition = decompose(g);
            slots[i] = std::move(entry);
        } catch (const size_error& e) {
            throw size_error(std::string(e.what()) + " while cataloguing " + to_graph6(g));
        } catch (const internal_error& e) {
            throw internal_error(std::string(e.what()) + " while cataloguing " + to_graph6(g));
        }
    });

    std::vector<CatalogEntry> out;
    for (auto& slot : slots) {
        if (slot) out.push_back(std::move(*slot));
    }
    return out;
}

}  // namespace pathcover
