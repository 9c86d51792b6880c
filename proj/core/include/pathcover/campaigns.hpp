#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Corpus controls for a verification campaign. Every field is optional;
// campaign-specific defaults apply. An explicit corpus replaces internal
// enumeration for the per-graph campaigns (AMI, ALPHA, ORACLE, TERM,
// DECOMP) and is rejected by the others.
struct CampaignBounds {
    std::optional<int> max_n;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::vector<Graph> corpus;
};

struct Counterexample {
    std::vector<std::string> inputs;  // graph6 of the graphs involved
    std::string observed;
    std::string expected;
    std::string context;
};

// Outcome of one campaign run. Success means no counterexamples.
struct CampaignReport {
    std::string campaign;
    std::string corpus;  // human description, including seeds when sampled
    long checked = 0;    // individual claim instances evaluated
    std::optional<std::uint64_t> seed;
    std::vector<Counterexample> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

struct CampaignInfo {
    std::string id;
    std::string claim;  // one-line statement of the identity checked
};

// Fixed registry: AMI, ALPHA, DISJ, STAR, LEMMY, EDGEADD, MAX1, COT, TERM,
// DECOMP, DEGONE, FAMILY, ORACLE.
const std::vector<CampaignInfo>& campaign_registry();

// Runs a campaign exhaustively over its corpus (or its seeded sample for
// LEMMY and the generalized part of FAMILY). Throws argument_error for an
// unknown id. Deterministic given identical bounds.
CampaignReport run_campaign(const std::string& id, const CampaignBounds& bounds = {});

}  // namespace pathcover
