#include "pathcover/families.hpp"

#include <numeric>

namespace pathcover {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw parameter_error(message);
}

}  // namespace

Graph whirligig(const WhirligigSpec& spec) {
    require(spec.t >= 1, "whirligig needs t >= 1");
    require(spec.m >= 2 * spec.t - 1,
            "whirligig needs m >= 2t-1 (t=" + std::to_string(spec.t) +
                " requires m >= " + std::to_string(2 * spec.t - 1) + ")");
    GeneralizedWhirligigSpec general;
    general.t = spec.t;
    general.u0_size = spec.m - (2 * spec.t - 1);
    general.groups.assign(static_cast<std::size_t>(2 * spec.t - 1), {1, {1}});
    return generalized_whirligig(general);
}

Graph generalized_whirligig(const GeneralizedWhirligigSpec& spec) {
    require(spec.t >= 1, "generalized whirligig needs t >= 1");
    require(spec.u0_size >= 0, "|U_0| must be nonnegative");
    int expected_groups = 2 * spec.t - 1;
    require(static_cast<int>(spec.groups.size()) == expected_groups,
            "expected " + std::to_string(expected_groups) + " groups, got " +
                std::to_string(spec.groups.size()));

    int total = spec.u0_size;
    for (int i = 0; i < expected_groups; ++i) {
        const auto& group = spec.groups[i];
        std::string which = "group " + std::to_string(i + 1);
        require(group.u_size >= 1, which + ": |U_i| must be >= 1");
        require(static_cast<int>(group.v_sizes.size()) == group.u_size,
                which + ": expected " + std::to_string(group.u_size) + " V sets, got " +
                    std::to_string(group.v_sizes.size()));
        total += group.u_size;
        for (int v_size : group.v_sizes) {
            require(v_size >= 1, which + ": every V set must be non-empty");
            total += v_size;
        }
    }
    if (total > kMaxVertices) {
        throw size_error("generalized whirligig needs " + std::to_string(total) +
                         " vertices, cap is " + std::to_string(kMaxVertices));
    }

    // Label blocks: U_0, U_1, ..., then V sets in (i, j) order.
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint32_t> u_masks(spec.groups.size());
    int next = spec.u0_size;
    std::uint32_t clique = (1u << spec.u0_size) - 1u;
    for (std::size_t i = 0; i < spec.groups.size(); ++i) {
        u_masks[i] = ((1u << spec.groups[i].u_size) - 1u) << next;
        clique |= u_masks[i];
        next += spec.groups[i].u_size;
    }

    auto connect_clique = [&edges](std::uint32_t mask) {
        std::vector<int> vs = VertexSet{mask}.to_vector();
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) edges.emplace_back(vs[a], vs[b]);
        }
    };

    connect_clique(clique);
    for (std::size_t i = 0; i < spec.groups.size(); ++i) {
        for (int v_size : spec.groups[i].v_sizes) {
            std::uint32_t v_mask = ((1u << v_size) - 1u) << next;
            next += v_size;
            connect_clique(v_mask);
            for (int u : VertexSet{u_masks[i]}.to_vector()) {
                for (int v : VertexSet{v_mask}.to_vector()) edges.emplace_back(u, v);
            }
        }
    }
    return Graph(total, edges);
}

namespace {

Graph join_of_cliques(int clique, int expected_parts, const std::vector<int>& sizes,
                      const std::string& family) {
    require(static_cast<int>(sizes.size()) == expected_parts,
            family + " needs exactly " + std::to_string(expected_parts) + " part sizes, got " +
                std::to_string(sizes.size()));
    int total = clique;
    for (int size : sizes) {
        require(size >= 1, family + ": every part size must be >= 1");
        total += size;
    }
    if (total > kMaxVertices) {
        throw size_error(family + " needs " + std::to_string(total) + " vertices, cap is " +
                         std::to_string(kMaxVertices));
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < clique; ++a) {
        for (int b = a + 1; b < total; ++b) edges.emplace_back(a, b);
    }
    int at = clique;
    for (int size : sizes) {
        for (int a = at; a < at + size; ++a) {
            for (int b = a + 1; b < at + size; ++b) edges.emplace_back(a, b);
        }
        at += size;
    }
    return Graph(total, edges);
}

}  // namespace

Graph skupien(int r, const std::vector<int>& sizes) {
    require(r >= 1, "skupien needs r >= 1");
    return join_of_cliques(r, r + 1, sizes, "skupien");
}

Graph zelinka_type1(int r, const std::vector<int>& sizes) {
    require(r >= 1, "zelinka_type1 needs r >= 1");
    return join_of_cliques(r - 1, r + 1, sizes, "zelinka_type1");
}

namespace {

// Transcriptions keep the figures' vertex declaration order.
const std::vector<std::pair<int, int>> kNetEdges = {
    {0, 3}, {3, 4}, {4, 5}, {5, 3}, {1, 4}, {2, 5}};  // v1 v2 v3 u1 u2 u3

const std::vector<std::pair<int, int>> kA3CoreEdges = {
    {1, 3}, {1, 4}, {1, 5}, {3, 4}, {3, 5}, {4, 5},    // K4 on u1 u2 u3 u4
    {0, 1}, {2, 3}, {2, 4}, {6, 3}, {6, 4}, {7, 5}};   // v1 u1; v2/v3 to u2,u3; v4 u4

}  // namespace

Graph named(const std::string& name) {
    if (name == "fig1-net") return Graph(6, kNetEdges);
    if (name == "fig2-a3core") return Graph(8, kA3CoreEdges);
    if (name == "fig3-whirligig") return whirligig({.t = 3, .m = 5});
    throw argument_error("unknown named graph '" + name +
                         "' (known: fig1-net, fig2-a3core, fig3-whirligig)");
}

std::vector<std::string> named_graphs() {
    return {"fig1-net", "fig2-a3core", "fig3-whirligig"};
}

std::map<int, std::string> named_labels(const std::string& name) {
    if (name == "fig1-net") {
        return {{0, "v1"}, {1, "v2"}, {2, "v3"}, {3, "u1"}, {4, "u2"}, {5, "u3"}};
    }
    if (name == "fig2-a3core") {
        return {{0, "v1"}, {1, "u1"}, {2, "v2"}, {3, "u2"},
                {4, "u3"}, {5, "u4"}, {6, "v3"}, {7, "v4"}};
    }
    if (name == "fig3-whirligig") {
        return {{0, "u1"}, {1, "u2"}, {2, "u3"}, {3, "u4"}, {4, "u5"},
                {5, "v1"}, {6, "v2"}, {7, "v3"}, {8, "v4"}, {9, "v5"}};
    }
    throw argument_error("unknown named graph '" + name + "'");
}

}  // namespace pathcover
