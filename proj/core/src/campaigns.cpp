#include "pathcover/campaigns.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>

#include "pathcover/enumeration.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph_io.hpp"
#include "pathcover/invariants.hpp"
#include "pathcover/maximality.hpp"
#include "pathcover/parallel.hpp"

namespace pathcover {

namespace {

constexpr std::uint64_t kDefaultSeed = 20250810;

std::string g6(const Graph& g) { return to_graph6(g); }

// Per-work-item result; items are evaluated in parallel and merged in item
// order, so reports are deterministic regardless of scheduling.
struct ItemResult {
    long checked = 0;
    std::vector<Counterexample> bad;

    void expect_eq(long observed, long expected, std::vector<std::string> inputs,
                   const std::string& context) {
        ++checked;
        if (observed != expected) {
            bad.push_back({std::move(inputs), std::to_string(observed),
                           std::to_string(expected), context});
        }
    }
    void expect(bool ok, std::vector<std::string> inputs, const std::string& observed,
                const std::string& expected, const std::string& context) {
        ++checked;
        if (!ok) {
            bad.push_back({std::move(inputs), observed, expected, context});
        }
    }
};

template <typename Item, typename Fn>
void evaluate(const std::vector<Item>& items, Fn&& fn, CampaignReport& report) {
    std::vector<ItemResult> results(items.size());
    parallel_for(items.size(), [&](std::size_t i) { fn(items[i], results[i]); });
    for (auto& r : results) {
        report.checked += r.checked;
        for (auto& c : r.bad) report.counterexamples.push_back(std::move(c));
    }
}

std::vector<Graph> graphs_upto(int max_n, bool connected_only = false) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = enumerate_graphs(n, connected_only);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

struct Classified {
    Graph g;
    Classification c;
};

std::vector<Classified> classified_upto(int max_n) {
    auto graphs = graphs_upto(max_n);
    std::vector<Classified> out;
    out.reserve(graphs.size());
    for (auto& g : graphs) out.push_back({g, {}});
    parallel_for(out.size(), [&](std::size_t i) { out[i].c = classify(out[i].g); });
    return out;
}

// Corpus for the per-graph campaigns: the explicit corpus when given,
// otherwise internal enumeration.
std::vector<Graph> element_corpus(const CampaignBounds& bounds, int default_max_n,
                                  bool connected_only, std::string& description) {
    if (!bounds.corpus.empty()) {
        description = "explicit corpus (" + std::to_string(bounds.corpus.size()) + " graphs)";
        return bounds.corpus;
    }
    int max_n = bounds.max_n.value_or(default_max_n);
    description = std::string("all non-isomorphic ") + (connected_only ? "connected " : "") +
                  "graphs with 1 <= n <= " + std::to_string(max_n);
    return graphs_upto(max_n, connected_only);
}

void reject_corpus(const std::string& id, const CampaignBounds& bounds) {
    if (!bounds.corpus.empty()) {
        throw argument_error("campaign " + id + " builds its own corpus and does not accept "
                             "explicit graphs");
    }
}

// ---------------------------------------------------------------------------
// AMI: the defining join search for mu_check agrees with mu - i_H.

CampaignReport campaign_ami(const CampaignBounds& bounds) {
    CampaignReport report{.campaign = "AMI"};
    auto corpus = element_corpus(bounds, 6, false, report.corpus);
    evaluate(corpus, [](const Graph& g, ItemResult& r) {
        r.expect_eq(mu_check_direct(g, JoinMode::clique), mu_value(g) - i_h(g), {g6(g)},
                    "least l with K_l * G Hamiltonian vs mu - i_H");
    }, report);
    return report;
}

// ALPHA: clique joins and independent-set joins reach Hamiltonicity at the
// same l.

CampaignReport campaign_alpha(const CampaignBounds& bounds) {
    CampaignReport report{.campaign = "ALPHA"};
    auto corpus = element_corpus(bounds, 6, false, report.corpus);
    evaluate(corpus, [](const Graph& g, ItemResult& r) {
        r.expect_eq(mu_check_direct(g, JoinMode::independent),
                    mu_check_direct(g, JoinMode::clique), {g6(g)},
                    "independent-join search vs clique-join search");
    }, report);
    return report;
}

// DISJ: mu adds over disjoint unions; mu_check adds with a +1 per
// Hamiltonian factor.

CampaignReport campaign_disj(const CampaignBounds& bounds) {
    reject_corpus("DISJ", bounds);
    CampaignReport report{.campaign = "DISJ"};
    int max_n = bounds.max_n.value_or(5);
    auto graphs = graphs_upto(max_n);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i; j < graphs.size(); ++j) pairs.emplace_back(i, j);
    }
    report.corpus = "all unordered pairs of graphs with n <= " + std::to_string(max_n) + " (" +
                    std::to_string(pairs.size()) + " pairs)";
    evaluate(pairs, [&](const std::pair<int, int>& p, ItemResult& r) {
        const Graph& a = graphs[p.first];
        const Graph& b = graphs[p.second];
        Graph u = disjoint_union(a, b);
        r.expect_eq(mu_value(u), mu_value(a) + mu_value(b), {g6(a), g6(b)},
                    "mu(G + H disjoint)");
        r.expect_eq(mu_check(u), mu_check(a) + mu_check(b) + i_h(a) + i_h(b), {g6(a), g6(b)},
                    "mu_check(G + H disjoint)");
    }, report);
    return report;
}

// STAR: joining K_s lowers mu to max(1, mu-s) and mu_check to
// max(0, mu_check - s).

CampaignReport campaign_star(const CampaignBounds& bounds) {
    reject_corpus("STAR", bounds);
    CampaignReport report{.campaign = "STAR"};
    int max_n = bounds.max_n.value_or(5);
    auto graphs = graphs_upto(max_n);
    report.corpus = "all graphs with n <= " + std::to_string(max_n) + ", s in 0..3";
    evaluate(graphs, [](const Graph& g, ItemResult& r) {
        int base_mu = mu_value(g);
        int base_mc = mu_check(g);
        for (int s = 0; s <= 3; ++s) {
            Graph joined = s == 0 ? g : join(complete_graph(s), g);
            r.expect_eq(mu_value(joined), std::max(1, base_mu - s), {g6(g)},
                        "mu(K_s * G) at s=" + std::to_string(s));
            r.expect_eq(mu_check(joined), std::max(0, base_mc - s), {g6(g)},
                        "mu_check(K_s * G) at s=" + std::to_string(s));
        }
    }, report);
    return report;
}

// LEMMY: the m-fold closed form
// mu_check((G_1 + ... + G_m) * K_r) = max(0, sum mu_check + sum i_H - r)
// on seeded triples.

CampaignReport campaign_lemmy(const CampaignBounds& bounds) {
    reject_corpus("LEMMY", bounds);
    CampaignReport report{.campaign = "LEMMY"};
    int samples = bounds.samples.value_or(10000);
    std::uint64_t seed = bounds.seed.value_or(kDefaultSeed);
    report.seed = seed;
    int max_n = bounds.max_n.value_or(4);
    auto pool = graphs_upto(max_n);
    report.corpus = std::to_string(samples) + " seeded triples of graphs with n <= " +
                    std::to_string(max_n) + ", r <= 4, seed " + std::to_string(seed);

    std::mt19937_64 rng(seed);
    struct Triple {
        int a, b, c, r;
    };
    std::vector<Triple> triples(samples);
    for (auto& t : triples) {
        t.a = static_cast<int>(rng() % pool.size());
        t.b = static_cast<int>(rng() % pool.size());
        t.c = static_cast<int>(rng() % pool.size());
        t.r = static_cast<int>(rng() % 5);
    }

    evaluate(triples, [&](const Triple& t, ItemResult& r) {
        const Graph& a = pool[t.a];
        const Graph& b = pool[t.b];
        const Graph& c = pool[t.c];
        Graph u = disjoint_union(disjoint_union(a, b), c);
        int sum_mc = mu_check(a) + mu_check(b) + mu_check(c);
        int sum_ih = i_h(a) + i_h(b) + i_h(c);
        std::string ctx = "r=" + std::to_string(t.r);
        r.expect_eq(mu_value(u), mu_value(a) + mu_value(b) + mu_value(c),
                    {g6(a), g6(b), g6(c)}, "mu of the 3-fold disjoint union");
        r.expect_eq(mu_check(u), sum_mc + sum_ih, {g6(a), g6(b), g6(c)},
                    "mu_check of the 3-fold disjoint union");
        Graph starred = t.r == 0 ? u : join(complete_graph(t.r), u);
        r.expect_eq(mu_check(starred), std::max(0, sum_mc + sum_ih - t.r),
                    {g6(a), g6(b), g6(c)}, "mu_check of the union joined with K_r, " + ctx);
    }, report);
    return report;
}

// EDGEADD: adding one cross edge vw to G + H lowers mu by one exactly when
// v and w are both terminal-feasible, and lowers mu_check by two exactly
// for the K_1/K_1 pair.

CampaignReport campaign_edgeadd(const CampaignBounds& bounds) {
    reject_corpus("EDGEADD", bounds);
    CampaignReport report{.campaign = "EDGEADD"};
    int max_n = bounds.max_n.value_or(5);
    auto graphs = graphs_upto(max_n, true);

    struct Source {
        Graph g;
        std::vector<char> terminal;
    };
    std::vector<Source> sources;
    sources.reserve(graphs.size());
    for (auto& g : graphs) {
        Source s{g, std::vector<char>(g.order())};
        for (int v = 0; v < g.order(); ++v) s.terminal[v] = terminal_feasible(g, v);
        sources.push_back(std::move(s));
    }

    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        for (std::size_t j = i; j < sources.size(); ++j) pairs.emplace_back(i, j);
    }
    report.corpus = "all unordered pairs of connected graphs with n <= " +
                    std::to_string(max_n) + " (" + std::to_string(pairs.size()) +
                    " pairs), every cross edge";

    evaluate(pairs, [&](const std::pair<int, int>& p, ItemResult& r) {
        const Source& a = sources[p.first];
        const Source& b = sources[p.second];
        Graph u = disjoint_union(a.g, b.g);
        int base_mu = mu_value(u);
        int base_mc = mu_check(u);
        bool both_k1 = a.g.order() == 1 && b.g.order() == 1;
        for (int v = 0; v < a.g.order(); ++v) {
            for (int w = 0; w < b.g.order(); ++w) {
                Graph added = add_edge(u, v, a.g.order() + w);
                bool tt = a.terminal[v] && b.terminal[w];
                std::string ctx = "v=" + std::to_string(v) + ", w=" + std::to_string(w);
                r.expect_eq(mu_value(added), base_mu - (tt ? 1 : 0), {g6(a.g), g6(b.g)},
                            "mu((G+H) plus cross edge), " + ctx);
                int drop = both_k1 ? 2 : tt ? 1 : 0;
                r.expect_eq(mu_check(added), base_mc - drop, {g6(a.g), g6(b.g)},
                            "mu_check((G+H) plus cross edge), " + ctx);
            }
        }
    }, report);
    return report;
}

// MAX1: G is maximal with invariant t iff K_s * G is maximal with t - s,
// for 0 <= s < t. Checked in both directions.

CampaignReport campaign_max1(const CampaignBounds& bounds) {
    reject_corpus("MAX1", bounds);
    CampaignReport report{.campaign = "MAX1"};
    int max_n = bounds.max_n.value_or(6);
    auto classified = classified_upto(max_n);
    std::erase_if(classified, [](const Classified& e) { return e.c.t < 1; });
    report.corpus = "all graphs with mu_check >= 1 and n <= " + std::to_string(max_n) +
                    " (maximal and non-maximal), s in 0..t-1";

    evaluate(classified, [](const Classified& e, ItemResult& r) {
        for (int s = 0; s < e.c.t; ++s) {
            Classification joined = s == 0 ? e.c : classify(join(complete_graph(s), e.g));
            std::string ctx = "s=" + std::to_string(s);
            r.expect_eq(joined.t, e.c.t - s, {g6(e.g)}, "mu_check(K_s * G), " + ctx);
            r.expect(joined.in_m_t == e.c.in_m_t, {g6(e.g)},
                     joined.in_m_t ? "maximal" : "not maximal",
                     e.c.in_m_t ? "maximal" : "not maximal",
                     "maximality of K_s * G vs maximality of G, " + ctx);
        }
    }, report);
    return report;
}

// COT: for maximal G and H, the disjoint union is maximal iff each factor
// is complete or has no universal vertex.

CampaignReport campaign_cot(const CampaignBounds& bounds) {
    reject_corpus("COT", bounds);
    CampaignReport report{.campaign = "COT"};
    int max_n = bounds.max_n.value_or(5);
    auto classified = classified_upto(max_n);
    std::erase_if(classified, [](const Classified& e) { return !e.c.in_m_t; });

    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < classified.size(); ++i) {
        for (std::size_t j = i; j < classified.size(); ++j) pairs.emplace_back(i, j);
    }
    report.corpus = "all unordered pairs of maximal graphs with n <= " + std::to_string(max_n) +
                    " (" + std::to_string(pairs.size()) + " pairs)";

    evaluate(pairs, [&](const std::pair<int, int>& p, ItemResult& r) {
        const Classified& a = classified[p.first];
        const Classified& b = classified[p.second];
        auto tolerable = [](const Classified& e) {
            int k = e.g.order();
            bool complete = e.g.edge_count() == k * (k - 1) / 2;
            return complete || universal_vertices(e.g).empty();
        };
        Classification u = classify(disjoint_union(a.g, b.g));
        int expected_t = a.c.t + b.c.t + i_h(a.g) + i_h(b.g);
        r.expect_eq(u.t, expected_t, {g6(a.g), g6(b.g)}, "mu_check(G + H disjoint)");
        bool expected_maximal = tolerable(a) && tolerable(b);
        r.expect(u.in_m_t == expected_maximal, {g6(a.g), g6(b.g)},
                 u.in_m_t ? "maximal" : "not maximal",
                 expected_maximal ? "maximal" : "not maximal",
                 "maximality of the disjoint union of maximal factors");
    }, report);
    return report;
}

// TERM: in a maximal graph with t >= 1, a vertex ends a path of some
// minimum cover iff it is not universal; any two non-adjacent vertices are
// simultaneously terminal in some minimum cover.

CampaignReport campaign_term(const CampaignBounds& bounds) {
    CampaignReport report{.campaign = "TERM"};
    std::vector<Graph> corpus;
    if (!bounds.corpus.empty()) {
        corpus = bounds.corpus;
        report.corpus = "explicit corpus (" + std::to_string(corpus.size()) + " graphs)";
    } else {
        int max_n = bounds.max_n.value_or(7);
        auto classified = classified_upto(max_n);
        for (auto& e : classified) {
            if (e.c.in_m_t && e.c.t >= 1) corpus.push_back(e.g);
        }
        report.corpus = "all maximal graphs with mu_check >= 1 and n <= " +
                        std::to_string(max_n) + " (" + std::to_string(corpus.size()) +
                        " graphs)";
    }

    evaluate(corpus, [](const Graph& g, ItemResult& r) {
        Classification c = classify(g);
        if (!c.in_m_t || c.t < 1) {
            r.expect(false, {g6(g)}, "not maximal or t=0", "maximal with t >= 1",
                     "corpus precondition");
            return;
        }
        VertexSet universal = universal_vertices(g);
        for (int v = 0; v < g.order(); ++v) {
            bool expected = !universal.contains(v);
            r.expect(terminal_feasible(g, v) == expected, {g6(g)},
                     expected ? "not terminal-feasible" : "terminal-feasible",
                     expected ? "terminal-feasible" : "not terminal-feasible",
                     "terminal feasibility vs universality at v=" + std::to_string(v));
        }
        for (int v = 0; v < g.order(); ++v) {
            for (int w = v + 1; w < g.order(); ++w) {
                if (g.has_edge(v, w)) continue;
                r.expect(pair_terminal_feasible(g, v, w), {g6(g)}, "no such cover",
                         "minimum cover with both terminal",
                         "non-adjacent pair v=" + std::to_string(v) +
                             ", w=" + std::to_string(w));
            }
        }
    }, report);
    return report;
}

// DECOMP: every maximal graph with t >= 1 splits into universal vertices
// plus complete-or-trim components, the invariants sum back to t, and
// composing the parts reproduces the graph up to isomorphism.

CampaignReport campaign_decomp(const CampaignBounds& bounds) {
    CampaignReport report{.campaign = "DECOMP"};
    std::vector<Graph> corpus;
    if (!bounds.corpus.empty()) {
        corpus = bounds.corpus;
        report.corpus = "explicit corpus (" + std::to_string(corpus.size()) + " graphs)";
    } else {
        int max_n = bounds.max_n.value_or(7);
        auto classified = classified_upto(max_n);
        for (auto& e : classified) {
            if (e.c.in_m_t && e.c.t >= 1) corpus.push_back(e.g);
        }
        report.corpus = "all maximal graphs with mu_check >= 1 and n <= " +
                        std::to_string(max_n) + " (" + std::to_string(corpus.size()) +
                        " graphs)";
    }

    evaluate(corpus, [](const Graph& g, ItemResult& r) {
        Decomposition d;
        try {
            d = decompose(g);
        } catch (const error& e) {
            r.expect(false, {g6(g)}, e.what(), "a valid decomposition", "decompose");
            return;
        }
        int sum = 0;
        for (const auto& part : d.parts) sum += part.t_j + part.i_h_j;
        r.expect_eq(d.t, sum - d.s, {g6(g)}, "t vs sum(t_j) + sum(i_h_j) - s");

        std::vector<Graph> parts;
        for (const auto& part : d.parts) parts.push_back(part.component);
        r.expect_eq(predicted_mu_check(d.s, parts), d.t, {g6(g)},
                    "closed-form mu_check of the parts");

        // Label-exact reconstruction through the relabeling maps: the
        // universal clique joined with the parts must give back g itself.
        std::vector<std::uint32_t> rebuilt(g.order(), 0);
        std::uint32_t universal = universal_vertices(g).mask;
        std::uint32_t everyone = g.full_mask();
        for (std::uint32_t m = universal; m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            rebuilt[u] = everyone & ~(1u << u);
            for (std::uint32_t rest = everyone & ~(1u << u); rest != 0; rest &= rest - 1) {
                rebuilt[std::countr_zero(rest)] |= 1u << u;
            }
        }
        for (const auto& part : d.parts) {
            for (int a = 0; a < part.component.order(); ++a) {
                for (std::uint32_t m = part.component.neighbors(a); m != 0; m &= m - 1) {
                    rebuilt[part.to_original[a]] |=
                        1u << part.to_original[std::countr_zero(m)];
                }
            }
        }
        r.expect(Graph::from_adjacency(g.order(), rebuilt) == g, {g6(g)}, "different graph",
                 "label-exact reconstruction", "universal clique plus parts");

        if (g.order() <= 12) {
            r.expect(isomorphic(compose(d.s, parts), g), {g6(g)}, "different graph",
                     "isomorphic recomposition", "compose after decompose");
        }
    }, report);
    return report;
}

// DEGONE: connecting a vertex that already dominates two degree-one
// vertices to a third degree-one vertex never changes mu; and a trim
// maximal graph has at most 2t-1 degree-one vertices, attained exactly by
// the pendant-clique shape.

CampaignReport campaign_degone(const CampaignBounds& bounds) {
    reject_corpus("DEGONE", bounds);
    CampaignReport report{.campaign = "DEGONE"};
    int max_n = bounds.max_n.value_or(8);
    report.corpus = "all connected graphs with n <= " + std::to_string(max_n) +
                    " (pendant saturation) and all trim maximal graphs in the same "
                    "range (degree-one structure)";

    auto connected = graphs_upto(max_n, true);
    evaluate(connected, [](const Graph& g, ItemResult& r) {
        std::uint32_t deg_one = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 1) deg_one |= 1u << v;
        }
        if (std::popcount(deg_one) < 3) return;
        for (int u = 0; u < g.order(); ++u) {
            if (std::popcount(g.neighbors(u) & deg_one) < 2) continue;
            std::uint32_t third = deg_one & ~g.neighbors(u) & ~(1u << u);
            for (std::uint32_t m = third; m != 0; m &= m - 1) {
                int v3 = std::countr_zero(m);
                r.expect_eq(mu_value(add_edge(g, u, v3)), mu_value(g), {g6(g)},
                            "mu unchanged by edge u=" + std::to_string(u) +
                                " to degree-one v3=" + std::to_string(v3));
            }
        }
    }, report);

    auto classified = classified_upto(max_n);
    std::erase_if(classified, [](const Classified& e) { return !e.c.in_n_t; });
    evaluate(classified, [](const Classified& e, ItemResult& r) {
        const Graph& g = e.g;
        int t = e.c.t;
        std::uint32_t deg_one = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 1) deg_one |= 1u << v;
        }
        int count = std::popcount(deg_one);
        r.expect(count <= 2 * t - 1, {g6(g)}, std::to_string(count) + " degree-one vertices",
                 "at most " + std::to_string(2 * t - 1), "degree-one bound in a trim graph");

        bool structure = false;
        if (deg_one != 0 && deg_one != g.full_mask()) {
            std::uint32_t hubs = 0;
            bool distinct = true;
            for (std::uint32_t m = deg_one; m != 0; m &= m - 1) {
                std::uint32_t hub = g.neighbors(std::countr_zero(m));
                if ((hubs & hub) != 0) distinct = false;
                hubs |= hub;
            }
            Graph rest = induced_subgraph(g, VertexSet{g.full_mask() & ~deg_one}).first;
            int k = rest.order();
            structure = distinct && rest.edge_count() == k * (k - 1) / 2;
        }
        r.expect((count == 2 * t - 1) == structure, {g6(g)},
                 structure ? "pendant-clique shape" : "other shape",
                 count == 2 * t - 1 ? "pendant-clique shape" : "other shape",
                 "equality case of the degree-one bound");
    }, report);
    return report;
}

// FAMILY: the generators land in their advertised classes.

CampaignReport campaign_family(const CampaignBounds& bounds) {
    reject_corpus("FAMILY", bounds);
    CampaignReport report{.campaign = "FAMILY"};
    int samples = bounds.samples.value_or(50);
    std::uint64_t seed = bounds.seed.value_or(kDefaultSeed);
    report.seed = seed;
    report.corpus = "whirligigs t=2..4, m=2t-1..2t+2; " + std::to_string(samples) +
                    " seeded generalized whirligigs (total <= 18, seed " +
                    std::to_string(seed) + "); all clique-join families with total <= 12";

    struct Expected {
        Graph g;
        int t;
        bool trim;  // expect trim maximal (otherwise just maximal)
        std::string what;
    };
    std::vector<Expected> cases;

    for (int t = 2; t <= 4; ++t) {
        for (int m = 2 * t - 1; m <= 2 * t + 2; ++m) {
            if (m + 2 * t - 1 > kMaxVertices) continue;
            cases.push_back({whirligig({.t = t, .m = m}), t, true,
                             "whirligig t=" + std::to_string(t) + " m=" + std::to_string(m)});
        }
    }

    // Seeded generalized specs, rejection-sampled to stay within 18
    // vertices. t = 1 is excluded: with a single group every U_1 vertex is
    // universal, so those graphs are never trim.
    std::mt19937_64 rng(seed);
    for (int accepted = 0; accepted < samples;) {
        GeneralizedWhirligigSpec spec;
        spec.t = 2 + static_cast<int>(rng() % 3);
        spec.u0_size = static_cast<int>(rng() % 3);
        int total = spec.u0_size;
        for (int i = 0; i < 2 * spec.t - 1; ++i) {
            GeneralizedWhirligigSpec::Group group;
            group.u_size = 1 + static_cast<int>(rng() % 2);
            for (int j = 0; j < group.u_size; ++j) {
                group.v_sizes.push_back(1 + static_cast<int>(rng() % 2));
            }
            total += group.u_size;
            for (int v : group.v_sizes) total += v;
            spec.groups.push_back(std::move(group));
        }
        if (total > 18) continue;
        ++accepted;
        cases.push_back({generalized_whirligig(spec), spec.t, true,
                         "generalized whirligig t=" + std::to_string(spec.t) + ", " +
                             std::to_string(total) + " vertices"});
    }

    // Clique-join families, every size multiset within the 12-vertex cap.
    auto each_partition = [](int total, int parts, auto&& emit) {
        std::vector<int> sizes;
        auto rec = [&](auto&& self, int remaining, int slots, int minimum) -> void {
            if (slots == 0) {
                if (remaining == 0) emit(sizes);
                return;
            }
            for (int next = minimum; next * slots <= remaining; ++next) {
                sizes.push_back(next);
                self(self, remaining - next, slots - 1, next);
                sizes.pop_back();
            }
        };
        rec(rec, total, parts, 1);
    };
    for (int r = 1; r + (r + 1) <= 12; ++r) {
        for (int vertex_total = r + (r + 1); vertex_total <= 12; ++vertex_total) {
            each_partition(vertex_total - r, r + 1, [&](const std::vector<int>& sizes) {
                cases.push_back({skupien(r, sizes), 1, false,
                                 "skupien r=" + std::to_string(r)});
            });
        }
    }
    for (int r = 1; (r - 1) + (r + 1) <= 12; ++r) {
        for (int vertex_total = (r - 1) + (r + 1); vertex_total <= 12; ++vertex_total) {
            each_partition(vertex_total - (r - 1), r + 1, [&](const std::vector<int>& sizes) {
                cases.push_back({zelinka_type1(r, sizes), 2, false,
                                 "zelinka_type1 r=" + std::to_string(r)});
            });
        }
    }

    evaluate(cases, [](const Expected& e, ItemResult& r) {
        Classification c = classify(e.g);
        r.expect_eq(c.t, e.t, {g6(e.g)}, e.what + ": mu_check");
        bool ok = e.trim ? c.in_n_t : c.in_m_t;
        r.expect(ok, {g6(e.g)}, "outside the class",
                 e.trim ? "trim maximal" : "maximal", e.what + ": class membership");
    }, report);
    return report;
}

// ORACLE: the cover dynamic program agrees with exhaustive partition
// search.

CampaignReport campaign_oracle(const CampaignBounds& bounds) {
    CampaignReport report{.campaign = "ORACLE"};
    auto corpus = element_corpus(bounds, 7, false, report.corpus);
    evaluate(corpus, [](const Graph& g, ItemResult& r) {
        auto [value, witness] = mu(g);
        r.expect_eq(value, brute_mu(g), {g6(g)}, "dynamic program vs partition search");
        r.expect(witness.validates_against(g) &&
                     static_cast<int>(witness.paths.size()) == value,
                 {g6(g)}, "invalid witness", "witness with mu paths", "witness validation");
    }, report);
    return report;
}

using Runner = CampaignReport (*)(const CampaignBounds&);

const std::vector<std::pair<CampaignInfo, Runner>>& registry() {
    static const std::vector<std::pair<CampaignInfo, Runner>> table = {
        {{"AMI", "mu_check equals mu minus the Hamiltonicity indicator"}, campaign_ami},
        {{"ALPHA", "independent-set joins reach Hamiltonicity at the same l as cliques"},
         campaign_alpha},
        {{"DISJ", "mu and mu_check add over disjoint unions"}, campaign_disj},
        {{"STAR", "joining K_s lowers mu/mu_check by s with clamping"}, campaign_star},
        {{"LEMMY", "m-fold closed form for mu_check of unions joined with K_r"},
         campaign_lemmy},
        {{"EDGEADD", "a cross edge lowers mu iff both ends are terminal-feasible"},
         campaign_edgeadd},
        {{"MAX1", "maximality is preserved by joining K_s, shifting t by s"}, campaign_max1},
        {{"COT", "disjoint unions of maximal graphs are maximal iff factors are "
                 "complete or universal-vertex-free"},
         campaign_cot},
        {{"TERM", "terminal-feasible vertices of a maximal graph are the non-universal ones"},
         campaign_term},
        {{"DECOMP", "maximal graphs decompose into a clique joined with complete or trim parts"},
         campaign_decomp},
        {{"DEGONE", "degree-one saturation never changes mu; trim graphs have at most "
                    "2t-1 degree-one vertices"},
         campaign_degone},
        {{"FAMILY", "whirligig, generalized whirligig and clique-join generators land in "
                    "their advertised classes"},
         campaign_family},
        {{"ORACLE", "the cover dynamic program matches exhaustive partition search"},
         campaign_oracle},
    };
    return table;
}

}  // namespace

const std::vector<CampaignInfo>& campaign_registry() {
    static const std::vector<CampaignInfo> infos = [] {
        std::vector<CampaignInfo> out;
        for (const auto& [info, runner] : registry()) out.push_back(info);
        return out;
    }();
    return infos;
}

CampaignReport run_campaign(const std::string& id, const CampaignBounds& bounds) {
    std::string upper = id;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    for (const auto& [info, runner] : registry()) {
        if (info.id == upper) return runner(bounds);
    }
    throw argument_error("unknown campaign '" + id + "'");
}

}  // namespace pathcover
