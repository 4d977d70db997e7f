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

#ifndef MCGRAPH_CUTS_HPP_
#define MCGRAPH_CUTS_HPP_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mcgraph/matching.hpp"
#include "mcgraph/multigraph.hpp"
#include "mcgraph/vertex_set.hpp"

namespace mcg {

struct EdgeCut {
  VertexSet shore = 0;
  std::vector<EdgeId> boundary;  // ascending
};

EdgeCut MakeCut(const Multigraph& g, VertexSet shore);
bool IsTrivialShore(const Multigraph& g, VertexSet shore);

// Every perfect matching of the underlying simple graph, stored as the
// vertex pairs it matches. Parallel edges never change a crossing count, so
// tightness questions only need this table.
class PerfectMatchingTable {
 public:
  explicit PerfectMatchingTable(const Multigraph& g,
                                int bound = kDefaultPerfectMatchingBound);

  int size() const { return count_; }
  // Largest |M ∩ ∂(X)| over all perfect matchings M.
  int MaxCrossing(VertexSet x) const;
  bool IsTight(VertexSet x) const;

 private:
  int half_ = 0;
  int count_ = 0;
  std::vector<VertexSet> pairs_;
};

// Both sides of the cut must be nonempty. Throws NotMatchingCovered.
bool IsTight(const Multigraph& g, VertexSet x,
             int bound = kDefaultPerfectMatchingBound);

// Matching covered test of G/(X -> x) computed directly on bitmasks.
bool ContractionIsMatchingCovered(const BitAdjacency& adj, VertexSet all,
                                  VertexSet x);
bool IsSeparating(const Multigraph& g, VertexSet x);

// Visits every shore X with 1 < |X| < n-1, |X| odd and vertex 0 in X, so
// each nontrivial odd cut appears once. Stops when `visit` returns false.
void ForEachNontrivialOddShore(int n, const std::function<bool(VertexSet)>& visit);

struct Barrier {
  VertexSet set = 0;
  std::vector<VertexSet> odd_components;  // ordered by lowest vertex
};

bool IsBarrier(const Multigraph& g, VertexSet b);
// Nonempty barriers in increasing bitmask order. Requires a perfect matching;
// bounded by n <= 24.
void ForEachBarrier(const Multigraph& g,
                    const std::function<bool(const Barrier&)>& visit);
std::vector<Barrier> Barriers(const Multigraph& g);
std::vector<Barrier> MaximalBarriers(const Multigraph& g);

// ∂(V(Q)) for the odd component Q of G - B. Throws NotABarrier,
// NotAComponent.
EdgeCut BarrierCut(const Multigraph& g, VertexSet b, VertexSet q);
bool IsSpecialBarrierCut(const Multigraph& g, VertexSet b, VertexSet x);
// True when some barrier of G makes ∂(X) a special barrier-cut.
std::optional<VertexSet> SpecialBarrierFor(const Multigraph& g, VertexSet x);

bool IsTwoSeparation(const Multigraph& g, VertexId u, VertexId v);
std::vector<std::pair<VertexId, VertexId>> TwoSeparations(const Multigraph& g);
// Cuts ∂(V(G1)+u) and ∂(V(G1)+v) for every grouping of the components of
// G - {u,v}; G1 always holds the component with the lowest vertex.
std::vector<EdgeCut> TwoSeparationCuts(const Multigraph& g, VertexId u,
                                       VertexId v);

bool IsRobust(const Multigraph& g, VertexSet x);

enum class CutKind { kTrivial, kTight, kRobust, kSeparating, kNonSeparating };
const char* CutKindName(CutKind kind);
CutKind ClassifyCut(const Multigraph& g, VertexSet x);

}  // namespace mcg

#endif  // MCGRAPH_CUTS_HPP_
