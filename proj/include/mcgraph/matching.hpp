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

#ifndef MCGRAPH_MATCHING_HPP_
#define MCGRAPH_MATCHING_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mcgraph/multigraph.hpp"

namespace mcg {

inline constexpr int kDefaultPerfectMatchingBound = 24;

struct Matching {
  std::vector<EdgeId> edges;  // ascending
  VertexSet covered = 0;

  int size() const { return static_cast<int>(edges.size()); }
  bool is_perfect(const Multigraph& g) const {
    return covered == g.all_vertices();
  }
};

// Tutte set S with o(G - S) > |S|.
struct TutteViolator {
  VertexSet s = 0;
  int odd_count = 0;
};

// mate[v] = partner of v, or -1.
using MateArray = std::array<std::int8_t, kMaxVertices>;

// Edmonds' blossom algorithm on the simple graph induced by `active`.
// Returns the matching size and fills `mate`.
int MaximumMatchingOn(const BitAdjacency& adj, VertexSet active,
                      MateArray& mate);
int MaximumMatchingSize(const BitAdjacency& adj, VertexSet active);
bool HasPerfectMatchingOn(const BitAdjacency& adj, VertexSet active);

// For a graph with a perfect matching, marks allowed[v] with every neighbor w
// such that some perfect matching of the induced graph uses vw. Returns false
// (and leaves `allowed` unspecified) when there is no perfect matching.
bool AllowedNeighbors(const BitAdjacency& adj, VertexSet active,
                      std::array<VertexSet, kMaxVertices>& allowed);

// Maximum matching of the underlying simple graph, lifted back to G using the
// lowest-id parallel edge of every matched pair.
Matching MaxMatching(const Multigraph& g);
bool HasPerfectMatching(const Multigraph& g);

// Number of odd components of G - S.
int OddComponentsCount(const Multigraph& g, VertexSet s);

// Derived from the Gallai-Edmonds decomposition: S is the set of vertices
// adjacent to, but not in, the set of vertices some maximum matching misses.
std::optional<TutteViolator> FindTutteViolator(const Multigraph& g);

// Every perfect matching exactly once (parallel edges distinguished), in
// lexicographic order of edge ids. The callback returns false to stop.
// Throws kBoundExceeded when n > bound.
void ForEachPerfectMatching(const Multigraph& g,
                            const std::function<bool(const Matching&)>& visit,
                            int bound = kDefaultPerfectMatchingBound);
std::vector<Matching> EnumeratePerfectMatchings(
    const Multigraph& g, int bound = kDefaultPerfectMatchingBound);

// Perfect matchings of the simple graph induced by `active`, as mate arrays.
void ForEachPerfectMatchingOn(const BitAdjacency& adj, VertexSet active,
                              const std::function<bool(const MateArray&)>& visit);

bool HasPmContaining(const Multigraph& g, EdgeId e);
bool HasPmAvoidingVertices(const Multigraph& g, VertexId u, VertexId v);

}  // namespace mcg

#endif  // MCGRAPH_MATCHING_HPP_
