#include "pathcover/invariants.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pathcover/parallel.hpp"

namespace pathcover {

bool PathCover::validates_against(const Graph& g) const {
    std::uint32_t seen = 0;
    for (const auto& path : paths) {
        if (path.empty()) return false;
        for (std::size_t i = 0; i < path.size(); ++i) {
            int v = path[i];
            if (v < 0 || v >= g.order()) return false;
            if ((seen >> v) & 1u) return false;
            seen |= 1u << v;
            if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
        }
    }
    return seen == g.full_mask();
}

bool is_hamiltonian(const Graph& g) {
    int n = g.order();
    if (n == 1) return true;
    if (n == 2) return g.has_edge(0, 1);
    if (!is_connected(g)) return false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 2) return false;
    }

    // reach[mask] = endpoints of paths that start at vertex 0 and visit
    // exactly `mask`. Only masks containing vertex 0 are populated.
    std::uint32_t full = g.full_mask();
    std::vector<std::uint32_t> reach(std::size_t(1) << n, 0);
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask < full; mask += 2) {
        std::uint32_t ends = reach[mask];
        while (ends != 0) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            for (std::uint32_t m = g.neighbors(v) & ~mask; m != 0; m &= m - 1) {
                int w = std::countr_zero(m);
                reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return (reach[full] & g.neighbors(0) & ~1u) != 0;
}

int i_h(const Graph& g) { return is_hamiltonian(g) ? 1 : 0; }

namespace {

constexpr std::uint8_t kUnreached = 0xff;

// Restrictions on the cover dynamic program. A vertex in `no_enter` may only
// be covered by opening a new path at it (so it starts a path); a vertex in
// `no_leave` never extends its path further (so it ends one).
struct CoverRestriction {
    std::uint32_t no_enter = 0;
    std::uint32_t no_leave = 0;
};

// cost[mask * n + v] = fewest paths covering exactly `mask` with the open
// path ending at v, or kUnreached.
class CoverDp {
public:
    CoverDp(const Graph& g, CoverRestriction restrict)
        : g_(g), n_(g.order()), cost_(std::size_t(n_) << n_, kUnreached) {
        std::uint32_t full = g_.full_mask();
        for (int v = 0; v < n_; ++v) at(1u << v, v) = 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::uint8_t closed = kUnreached;
            for (std::uint32_t m = mask; m != 0; m &= m - 1) {
                int v = std::countr_zero(m);
                std::uint8_t c = at(mask, v);
                if (c == kUnreached) continue;
                closed = std::min(closed, c);
                if ((restrict.no_leave >> v) & 1u) continue;
                std::uint32_t ext = g_.neighbors(v) & ~mask & ~restrict.no_enter;
                while (ext != 0) {
                    int w = std::countr_zero(ext);
                    ext &= ext - 1;
                    relax(mask | (1u << w), w, c);
                }
            }
            if (closed == kUnreached) continue;
            std::uint32_t open = full & ~mask;
            while (open != 0) {
                int w = std::countr_zero(open);
                open &= open - 1;
                relax(mask | (1u << w), w, static_cast<std::uint8_t>(closed + 1));
            }
        }
    }

    int value() const {
        std::uint8_t best = kUnreached;
        for (int v = 0; v < n_; ++v) best = std::min(best, at(g_.full_mask(), v));
        return best;  // always reachable: singletons cover everything
    }

    // Walks one optimal trajectory backward, preferring path extension over
    // path opening and smaller vertices over larger ones at every step, then
    // presents the cover canonically: each path oriented with its smaller
    // endpoint first, paths sorted by first vertex.
    PathCover witness(CoverRestriction restrict) const {
        std::uint32_t mask = g_.full_mask();
        int c = value();
        int v = -1;
        for (int u = 0; u < n_; ++u) {
            if (at(mask, u) == c) {
                v = u;
                break;
            }
        }
        if (v < 0) throw internal_error("cover backtrack lost the final state");

        PathCover cover;
        std::vector<int> tail{v};  // current path, end first
        while (true) {
            std::uint32_t prev = mask & ~(1u << v);
            if (prev == 0) {
                cover.paths.emplace_back(tail.rbegin(), tail.rend());
                break;
            }
            int from = -1;
            if (!((restrict.no_enter >> v) & 1u)) {
                for (std::uint32_t m = g_.neighbors(v) & prev & ~restrict.no_leave; m != 0;
                     m &= m - 1) {
                    int u = std::countr_zero(m);
                    if (at(prev, u) == c) {
                        from = u;
                        break;
                    }
                }
            }
            if (from >= 0) {
                tail.push_back(from);
            } else {
                // v opened its path here; resume from the closed state.
                cover.paths.emplace_back(tail.rbegin(), tail.rend());
                --c;
                for (std::uint32_t m = prev; m != 0; m &= m - 1) {
                    int u = std::countr_zero(m);
                    if (at(prev, u) == c) {
                        from = u;
                        break;
                    }
                }
                if (from < 0) throw internal_error("cover backtrack lost a predecessor");
                tail.assign(1, from);
            }
            mask = prev;
            v = from;
        }

        for (auto& path : cover.paths) {
            if (path.front() > path.back()) std::reverse(path.begin(), path.end());
        }
        std::sort(cover.paths.begin(), cover.paths.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return cover;
    }

private:
    std::uint8_t& at(std::uint32_t mask, int v) { return cost_[std::size_t(mask) * n_ + v]; }
    std::uint8_t at(std::uint32_t mask, int v) const {
        return cost_[std::size_t(mask) * n_ + v];
    }
    void relax(std::uint32_t mask, int v, std::uint8_t c) {
        std::uint8_t& slot = at(mask, v);
        if (c < slot) slot = c;
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint8_t> cost_;
};

int cover_value(const Graph& g, CoverRestriction restrict) {
    return CoverDp(g, restrict).value();
}

}  // namespace

std::pair<int, PathCover> mu(const Graph& g) {
    CoverDp dp(g, {});
    int value = dp.value();
    PathCover witness = dp.witness({});
    if (static_cast<int>(witness.paths.size()) != value || !witness.validates_against(g)) {
        throw internal_error("path cover witness reconstruction failed");
    }
    return {value, std::move(witness)};
}

int mu_value(const Graph& g) { return cover_value(g, {}); }

int mu_check(const Graph& g) { return mu_value(g) - i_h(g); }

int mu_check_direct(const Graph& g, JoinMode mode) {
    if (is_hamiltonian(g)) return 0;
    for (int l = 1;; ++l) {
        if (g.order() + l > kMaxVertices) {
            throw size_error("join search exceeded " + std::to_string(kMaxVertices) +
                             " vertices at l=" + std::to_string(l));
        }
        Graph block = mode == JoinMode::clique ? complete_graph(l) : Graph(l);
        if (is_hamiltonian(join(block, g))) return l;
    }
}

bool terminal_feasible(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) {
        throw argument_error("vertex " + std::to_string(v) + " outside [0, " +
                             std::to_string(g.order() - 1) + "]");
    }
    // Forcing v to be covered by a path opening makes v a path start; every
    // cover with v as an endpoint can be oriented that way.
    return cover_value(g, {.no_enter = 1u << v}) == mu_value(g);
}

bool pair_terminal_feasible(const Graph& g, int v, int w) {
    if (v == w) throw argument_error("pair terminal query needs two distinct vertices");
    int base = mu_value(g);
    // Distinct paths (or both singletons): both vertices open their paths.
    if (cover_value(g, {.no_enter = (1u << v) | (1u << w)}) == base) return true;
    // Same path: v starts it, w ends it (w never extends further).
    return cover_value(g, {.no_enter = 1u << v, .no_leave = 1u << w}) == base;
}

namespace {

// Exhaustive partition search used as an oracle for mu. For the smallest
// uncovered vertex s it enumerates every simple path through s within the
// uncovered vertices (once per path up to reversal) and recurses on the
// remainder. Shares no state or tables with the dynamic program above.
class BruteCover {
public:
    explicit BruteCover(const Graph& g) : g_(g), best_(g.order()) {}

    int run() {
        descend(g_.full_mask(), 0);
        return best_;
    }

private:
    void descend(std::uint32_t uncovered, int used) {
        if (uncovered == 0) {
            best_ = std::min(best_, used);
            return;
        }
        if (used + 1 >= best_) return;
        int s = std::countr_zero(uncovered);
        grow_right(uncovered, used, s, s, 1u << s, -1);
    }

    // Path shape: reverse(left arm) + s + right arm. A nonempty left arm
    // requires a nonempty right arm whose first vertex exceeds the left
    // arm's first vertex, so each path is considered once up to reversal.
    void grow_right(std::uint32_t uncovered, int used, int s, int tip, std::uint32_t path,
                    int first_right) {
        descend(uncovered & ~path, used + 1);
        for (std::uint32_t m = g_.neighbors(tip) & uncovered & ~path; m != 0; m &= m - 1) {
            int w = std::countr_zero(m);
            grow_right(uncovered, used, s, w, path | (1u << w), first_right < 0 ? w : first_right);
        }
        if (first_right >= 0) {
            std::uint32_t starts =
                g_.neighbors(s) & uncovered & ~path & ((1u << first_right) - 1u);
            for (std::uint32_t m = starts; m != 0; m &= m - 1) {
                int w = std::countr_zero(m);
                grow_left(uncovered, used, w, path | (1u << w));
            }
        }
    }

    void grow_left(std::uint32_t uncovered, int used, int tip, std::uint32_t path) {
        descend(uncovered & ~path, used + 1);
        for (std::uint32_t m = g_.neighbors(tip) & uncovered & ~path; m != 0; m &= m - 1) {
            int w = std::countr_zero(m);
            grow_left(uncovered, used, w, path | (1u << w));
        }
    }

    const Graph& g_;
    int best_;
};

}  // namespace

int brute_mu(const Graph& g) {
    if (g.order() > 10) {
        throw size_error("brute-force cover search capped at 10 vertices, got " +
                         std::to_string(g.order()));
    }
    return BruteCover(g).run();
}

InvariantReport analyze(const Graph& g) {
    InvariantReport report;
    auto [value, witness] = mu(g);
    report.mu = value;
    report.witness = std::move(witness);
    report.i_h = i_h(g);
    report.mu_check = report.mu - report.i_h;

    int n = g.order();
    std::vector<char> terminal(n, 0);
    auto probe = [&](std::size_t v) {
        terminal[v] = cover_value(g, {.no_enter = 1u << v}) == value ? 1 : 0;
    };
    if (n <= 20) {
        parallel_for(static_cast<std::size_t>(n), probe);
    } else {
        // Above 20 vertices each probe's table is large; run them one at
        // a time to bound peak memory.
        for (int v = 0; v < n; ++v) probe(static_cast<std::size_t>(v));
    }
    for (int v = 0; v < n; ++v) {
        if (terminal[v]) report.terminal_feasible.mask |= 1u << v;
    }
    return report;
}

}  // namespace pathcover
