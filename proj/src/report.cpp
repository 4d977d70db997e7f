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

#include <cstdlib>
#include <functional>
#include <string>

#include "mcgraph/campaigns.hpp"
#include "mcgraph/canonical.hpp"
#include "mcgraph/cuts.hpp"
#include "mcgraph/decomposition.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/mc_core.hpp"
#include "mcgraph/wheel_like.hpp"

namespace mcg {
namespace {

constexpr int kListedBarriers = 16;

template <typename T>
void ReadEnv(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v < 0) {
    throw Error(ErrorCode::kParseError,
                std::string(name) + " must be a nonnegative integer");
  }
  field = static_cast<T>(v);
}

Json CounterexampleJson(const Counterexample& c) {
  Json j;
  j["reason"] = c.reason;
  j["canonical"] = ToHex(Canonical(c.graph));
  j["mg"] = EncodeMg(c.graph);
  j["detail"] = c.detail;
  return j;
}

Json VertexList(VertexSet s) { return Json(ToVector(s)); }

}  // namespace

int ExitCode(const Error& error) {
  return error.code() == ErrorCode::kBoundExceeded ? kExitBoundExceeded : kExitUsage;
}

Ceilings CeilingsFromEnvironment() {
  Ceilings c;
  int max_n = -1;
  ReadEnv("MCGRAPH_MAX_N", max_n);
  if (max_n >= 0) c.max_n = max_n;
  ReadEnv("MCGRAPH_CORPUS_MAX_N", c.corpus_n);
  ReadEnv("MCGRAPH_MAX_MULT", c.mult);
  ReadEnv("MCGRAPH_MAX_SEEDS", c.seeds);
  ReadEnv("MCGRAPH_MAX_SAMPLES", c.samples);
  return c;
}

Json CampaignReport::ToJson(bool with_wall_clock) const {
  Json j;
  j["schema"] = kReportSchema;
  j["campaign"] = campaign;
  j["params"] = params;
  j["summary"] = summary;
  j["verdicts"] = Json::array();
  for (const Json& v : verdicts) j["verdicts"].push_back(v);
  j["counterexamples"] = Json::array();
  for (const Counterexample& c : counterexamples) {
    j["counterexamples"].push_back(CounterexampleJson(c));
  }
  if (with_wall_clock) j["wall_clock_seconds"] = wall_clock_seconds;
  return j;
}

Json GraphSummary(const Multigraph& g) {
  Json j;
  j["canonical"] = ToHex(Canonical(g));
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  return j;
}

Json AnalyzeGraph(const Multigraph& g) {
  Json j = GraphSummary(g);
  j["simple"] = g.is_simple();
  j["graph6"] = g.is_simple() ? Json(EncodeGraph6(g)) : Json(nullptr);
  j["min_degree"] = g.num_vertices() > 0 ? Json(g.min_degree()) : Json(nullptr);
  j["max_degree"] = g.num_vertices() > 0 ? Json(g.max_degree()) : Json(nullptr);
  j["connected"] = IsConnected(g);
  j["bipartite"] = IsBipartite(g);
  Json skipped = Json::array();
  // Fills j[key] from f; library bound errors leave null and a skip record.
  auto field = [&](const char* key, const std::function<Json()>& f) {
    try {
      j[key] = f();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBoundExceeded) throw;
      j[key] = nullptr;
      Json s;
      s["field"] = key;
      s["reason"] = e.what();
      skipped.push_back(s);
    }
  };
  const bool mc = IsMatchingCovered(g);
  j["matching_covered"] = mc;
  field("bicritical", [&] { return Json(IsBicritical(g)); });
  field("brick", [&] { return Json(IsBrick(g)); });
  const bool brick = j["brick"].is_boolean() && j["brick"].get<bool>();
  auto if_mc = [&](const char* key, const std::function<Json()>& f) {
    if (mc) {
      field(key, f);
    } else {
      j[key] = nullptr;
    }
  };
  if_mc("brace", [&] { return Json(IsBrace(g)); });
  if_mc("solid", [&] { return Json(IsSolid(g)); });
  if_mc("minimal", [&] { return Json(RemovableEdges(g).empty()); });
  if_mc("near_bipartite", [&] { return Json(NearBipartitePair(g).has_value()); });
  if_mc("removable_edges", [&] { return Json(RemovableEdges(g)); });
  if_mc("removable_doubletons", [&] {
    Json d = Json::array();
    for (auto [e, f] : RemovableDoubletons(g)) d.push_back({e, f});
    return d;
  });
  if_mc("removable_classes", [&] {
    return Json(static_cast<int>(RemovableClasses(g).size()));
  });
  if (brick) {
    field("wheel_like_hubs", [&] { return VertexList(WheelLikeHubsOfBrick(g)); });
  } else {
    j["wheel_like_hubs"] = nullptr;
  }
  if_mc("tight_cut_decomposition", [&] {
    const DecompResult d = TightCutDecomposition(g);
    Json t;
    t["bricks"] = d.brick_count();
    t["braces"] = static_cast<int>(d.components.size()) - d.brick_count();
    return t;
  });
  if_mc("maximal_barriers", [&] {
    const std::vector<Barrier> all = MaximalBarriers(g);
    Json b;
    b["total"] = static_cast<int>(all.size());
    b["listed"] = Json::array();
    for (std::size_t i = 0; i < all.size() && i < kListedBarriers; ++i) {
      b["listed"].push_back(VertexList(all[i].set));
    }
    return b;
  });
  j["skipped"] = skipped;
  return j;
}

}  // namespace mcg
