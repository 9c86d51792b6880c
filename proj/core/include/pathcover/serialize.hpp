#pragma once

#include <string>

#include "pathcover/campaigns.hpp"
#include "pathcover/enumeration.hpp"
#include "pathcover/invariants.hpp"
#include "pathcover/maximality.hpp"

namespace pathcover {

// Single-line JSON renderings of the report types. Shapes:
//   invariants:     {"graph6","mu","muCheck","iH","terminalFeasible","witness"}
//   classification: {"graph6","t","inMt","connected","hasUniversal","inNt"}
//   decomposition:  {"graph6","s","t","parts":[{"graph6","canonical","kind",
//                    "tj","ihj","map"}]}
//   catalog entry:  {"canonical","n","classification","decomposition"}
//   campaign:       {"campaign","claim","corpus","checked","seed",
//                    "counterexamples":[{"inputs","observed","expected","context"}]}
std::string to_json(const Graph& g, const InvariantReport& report);
std::string to_json(const Graph& g, const Classification& classification);
std::string to_json(const Graph& g, const Decomposition& decomposition);
std::string to_json(const CatalogEntry& entry);
std::string to_json(const CampaignReport& report);

}  // namespace pathcover
