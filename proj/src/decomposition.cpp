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

#include "mcgraph/decomposition.hpp"

#include <algorithm>

#include "mcgraph/cuts.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/mc_core.hpp"

namespace mcg {
namespace {

void RequireMatchingCovered(const Multigraph& g) {
  if (!IsMatchingCovered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
}

std::vector<VertexSet> TightShores(const Multigraph& g, bool prune) {
  RequireMatchingCovered(g);
  std::vector<VertexSet> out;
  const int n = g.num_vertices();
  if (n < 6) return out;
  const PerfectMatchingTable table(g, n);
  const BitAdjacency& adj = g.adjacency();
  const VertexSet all = g.all_vertices();
  ForEachNontrivialOddShore(n, [&](VertexSet x) {
    // Shores of a tight cut in a matching covered graph are connected.
    if (prune && (!IsConnectedWithin(adj, x) || !IsConnectedWithin(adj, all & ~x))) {
      return true;
    }
    if (table.IsTight(x)) out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end(), LexLess);
  return out;
}

void Split(const Multigraph& g, std::vector<VertexSet> provenance,
           std::mt19937_64* rng, DecompResult& out) {
  std::optional<VertexSet> shore = FindNontrivialTightCut(g, rng);
  if (!shore) {
    out.components.push_back(
        {g, IsBipartite(g) ? PieceKind::kBrace : PieceKind::kBrick,
         std::move(provenance)});
    return;
  }
  VertexSet original = 0;
  ForEach(*shore, [&](VertexId v) { original |= provenance[v]; });
  out.cut_trace.push_back(original);
  for (VertexSet side : {g.all_vertices() & ~*shore, *shore}) {
    // Shrinking `side` leaves the other shore plus one contracted vertex.
    ContractResult c = Contract(g, side);
    std::vector<VertexSet> sub(c.graph.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      sub[c.vertex_map[v]] |= provenance[v];
    }
    Split(c.graph, std::move(sub), rng, out);
  }
}

}  // namespace

const char* PieceKindName(PieceKind kind) {
  return kind == PieceKind::kBrick ? "brick" : "brace";
}

int DecompResult::brick_count() const {
  return static_cast<int>(std::count_if(
      components.begin(), components.end(),
      [](const DecompComponent& c) { return c.kind == PieceKind::kBrick; }));
}

std::vector<std::pair<PieceKind, CanonicalForm>> DecompResult::signature() const {
  std::vector<std::pair<PieceKind, CanonicalForm>> out;
  for (const auto& c : components) out.emplace_back(c.kind, Canonical(UnderlyingSimple(c.graph)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> NontrivialTightShores(const Multigraph& g) {
  return TightShores(g, true);
}

std::vector<VertexSet> NontrivialTightShoresReference(const Multigraph& g) {
  return TightShores(g, false);
}

std::optional<VertexSet> FindNontrivialTightCut(const Multigraph& g,
                                                std::mt19937_64* rng) {
  std::vector<VertexSet> shores = NontrivialTightShores(g);
  if (shores.empty()) return std::nullopt;
  if (rng == nullptr) return shores.front();
  std::uniform_int_distribution<std::size_t> pick(0, shores.size() - 1);
  return shores[pick(*rng)];
}

DecompResult TightCutDecomposition(const Multigraph& g, std::mt19937_64* rng) {
  RequireMatchingCovered(g);
  std::vector<VertexSet> provenance(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) provenance[v] = Bit(v);
  DecompResult out;
  Split(g, std::move(provenance), rng, out);
  return out;
}

bool IsBrace(const Multigraph& g) {
  RequireMatchingCovered(g);
  return IsBipartite(g) && NontrivialTightShores(g).empty();
}

int BrickCount(const Multigraph& g) {
  return TightCutDecomposition(g).brick_count();
}

bool IsNearBrick(const Multigraph& g) { return BrickCount(g) == 1; }

bool IsSolid(const Multigraph& g) {
  RequireMatchingCovered(g);
  const int n = g.num_vertices();
  if (n > kSolidityBound) {
    throw Error(ErrorCode::kBoundExceeded,
                "solidity test limited to " + std::to_string(kSolidityBound) +
                    " vertices");
  }
  if (n < 6) return true;
  const PerfectMatchingTable table(g, n);
  const BitAdjacency& adj = g.adjacency();
  const VertexSet all = g.all_vertices();
  bool solid = true;
  ForEachNontrivialOddShore(n, [&](VertexSet x) {
    if (ContractionIsMatchingCovered(adj, all, x) &&
        ContractionIsMatchingCovered(adj, all, all & ~x) && !table.IsTight(x)) {
      solid = false;
    }
    return solid;
  });
  return solid;
}

}  // namespace mcg
