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

#ifndef MCGRAPH_MC_CORE_HPP_
#define MCGRAPH_MC_CORE_HPP_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mcgraph/multigraph.hpp"

namespace mcg {

// A removable edge, or a removable doubleton {e, f} with e < f.
struct RemovableClass {
  EdgeId e = -1;
  EdgeId f = -1;  // -1 for a single removable edge

  static RemovableClass Single(EdgeId e) { return {e, -1}; }
  static RemovableClass Doubleton(EdgeId a, EdgeId b) {
    return a < b ? RemovableClass{a, b} : RemovableClass{b, a};
  }
  bool is_single() const { return f < 0; }
  friend bool operator==(const RemovableClass&, const RemovableClass&) = default;
  friend auto operator<=>(const RemovableClass&, const RemovableClass&) = default;
};

// Connected, at least two vertices, and every edge in some perfect matching.
bool IsMatchingCovered(const Multigraph& g);
bool IsMatchingCoveredOn(const BitAdjacency& adj, VertexSet active);

// All of the following throw kNotMatchingCovered unless g is matching
// covered.
bool IsRemovableEdge(const Multigraph& g, EdgeId e);
std::vector<EdgeId> RemovableEdges(const Multigraph& g);
std::vector<std::pair<EdgeId, EdgeId>> RemovableDoubletons(const Multigraph& g);
// Singles first (ascending), then doubletons (ascending).
std::vector<RemovableClass> RemovableClasses(const Multigraph& g);

// Definitional reference implementations: every test deletes edges from the
// multigraph and re-runs IsMatchingCovered.
std::vector<EdgeId> RemovableEdgesReference(const Multigraph& g);
std::vector<std::pair<EdgeId, EdgeId>> RemovableDoubletonsReference(
    const Multigraph& g);

// False below four vertices.
bool IsBicritical(const Multigraph& g);
// 3-connected and bicritical.
bool IsBrick(const Multigraph& g);
// Matching covered with no removable edge.
bool IsMinimalMatchingCovered(const Multigraph& g);

// First pair (e, f), lexicographically, with G - e - f bipartite and
// matching covered. Throws kNotMatchingCovered.
std::optional<std::pair<EdgeId, EdgeId>> NearBipartitePair(const Multigraph& g);

// Two removable edges with no common end.
bool HasTwoNonadjacentRemovableEdges(const Multigraph& g);

}  // namespace mcg

#endif  // MCGRAPH_MC_CORE_HPP_
