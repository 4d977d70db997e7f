// Copyright 2026 The mcgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCGRAPH_CAMPAIGNS_HPP_
#define MCGRAPH_CAMPAIGNS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/multigraph.hpp"

namespace mcg {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// Frozen results of the reconstruction searches run by the "examples"
// campaign.
inline constexpr char kR8Graph6[] = "GIJTSo";
inline constexpr const char* kNonsolidNonplanarSixVertexBricks[] = {
    "E]~w", "E^~G", "E^~w", "E~NG", "E~{w", "E~~w"};
inline constexpr int kThirdLevelNonWheelLikeBricks = 38;

// Hard limits on campaign parameters. Each field can be raised or lowered
// through the environment variable named next to it.
struct Ceilings {
  std::optional<int> max_n;  // MCGRAPH_MAX_N; unset keeps per-campaign limits
  int corpus_n = 10;         // MCGRAPH_CORPUS_MAX_N
  int mult = 3;              // MCGRAPH_MAX_MULT
  int seeds = 100;           // MCGRAPH_MAX_SEEDS
  long samples = 100000;     // MCGRAPH_MAX_SAMPLES
};
// Throws kParseError on a malformed value.
Ceilings CeilingsFromEnvironment();

// Unset fields take the campaign default. Setting a field the campaign does
// not use is a kBadSpec error.
struct CampaignParams {
  std::optional<int> max_n;
  std::optional<int> seeds;
  std::optional<int> mult_bound;
  std::optional<long> samples;
  std::optional<unsigned long> seed;
  std::vector<int> wheels;  // odd wheel sizes for the splice campaign
  std::string corpus;  // graph file replacing the enumeration
  bool exclude_hub_pairs = false;
  bool all_verdicts = false;  // record every graph, not only notable ones
};

struct Counterexample {
  Multigraph graph;
  std::string reason;
  Json detail = Json::object();
};

struct CampaignReport {
  std::string campaign;
  Json params = Json::object();
  Json summary = Json::object();
  std::vector<Json> verdicts;
  std::vector<Counterexample> counterexamples;
  double wall_clock_seconds = 0;

  bool passed() const { return counterexamples.empty(); }
  // Field order: schema, campaign, params, summary, verdicts,
  // counterexamples, wall_clock_seconds.
  Json ToJson(bool with_wall_clock = true) const;
};

// Process exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBoundExceeded = 3;

inline int ExitCode(const CampaignReport& report) {
  return report.passed() ? kExitPass : kExitCounterexample;
}
// kBoundExceeded maps to 3; every other library error is a usage error.
int ExitCode(const Error& error);

const std::vector<std::string>& CampaignNames();

// Throws kUnknownCampaign, kBadSpec, kBoundExceeded and kParseError.
CampaignReport RunCampaign(const std::string& name,
                           const CampaignParams& params,
                           const Ceilings& ceilings = CeilingsFromEnvironment());

// Structural report for one graph. Properties whose computation exceeds a
// library bound are null and listed under "skipped".
Json AnalyzeGraph(const Multigraph& g);

// Canonical form hex, order and size of g.
Json GraphSummary(const Multigraph& g);

}  // namespace mcg

#endif  // MCGRAPH_CAMPAIGNS_HPP_
