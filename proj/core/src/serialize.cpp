#include "pathcover/serialize.hpp"

#include <json.hpp>

#include "pathcover/graph_io.hpp"

namespace pathcover {

namespace {

using nlohmann::json;

json classification_json(const Classification& c) {
    return {{"t", c.t},
            {"inMt", c.in_m_t},
            {"connected", c.connected},
            {"hasUniversal", c.has_universal},
            {"inNt", c.in_n_t}};
}

json decomposition_json(const Decomposition& d) {
    json parts = json::array();
    for (const auto& part : d.parts) {
        parts.push_back({{"graph6", to_graph6(part.component)},
                         {"canonical", part.component.order() <= 12
                                           ? json(canonical_form(part.component))
                                           : json()},
                         {"kind", part.kind == PartKind::complete ? "complete" : "trim"},
                         {"tj", part.t_j},
                         {"ihj", part.i_h_j},
                         {"map", part.to_original}});
    }
    return {{"s", d.s}, {"t", d.t}, {"parts", std::move(parts)}};
}

}  // namespace

std::string to_json(const Graph& g, const InvariantReport& report) {
    json witness = json::array();
    for (const auto& path : report.witness.paths) witness.push_back(path);
    json out{{"graph6", to_graph6(g)},
             {"mu", report.mu},
             {"muCheck", report.mu_check},
             {"iH", report.i_h},
             {"terminalFeasible", report.terminal_feasible.to_vector()},
             {"witness", std::move(witness)}};
    return out.dump();
}

std::string to_json(const Graph& g, const Classification& classification) {
    json out = classification_json(classification);
    out["graph6"] = to_graph6(g);
    return out.dump();
}

std::string to_json(const Graph& g, const Decomposition& decomposition) {
    json out = decomposition_json(decomposition);
    out["graph6"] = to_graph6(g);
    return out.dump();
}

std::string to_json(const CatalogEntry& entry) {
    json out{{"canonical", entry.canonical},
             {"n", entry.n},
             {"classification", classification_json(entry.classification)},
             {"decomposition", entry.decomposition
                                   ? decomposition_json(*entry.decomposition)
                                   : json()}};
    return out.dump();
}

std::string to_json(const CampaignReport& report) {
    json bad = json::array();
    for (const auto& c : report.counterexamples) {
        bad.push_back({{"inputs", c.inputs},
                       {"observed", c.observed},
                       {"expected", c.expected},
                       {"context", c.context}});
    }
    std::string claim;
    for (const auto& info : campaign_registry()) {
        if (info.id == report.campaign) claim = info.claim;
    }
    json out{{"campaign", report.campaign},
             {"claim", claim},
             {"corpus", report.corpus},
             {"checked", report.checked},
             {"seed", report.seed ? json(*report.seed) : json()},
             {"counterexamples", std::move(bad)}};
    return out.dump();
}

}  // namespace pathcover
