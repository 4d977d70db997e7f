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

#include "mcgraph/mc_core.hpp"

#include <algorithm>
#include <array>

#include "mcgraph/error.hpp"
#include "mcgraph/matching.hpp"

namespace mcg {
namespace {

void RequireMatchingCovered(const Multigraph& g) {
  if (!IsMatchingCovered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
}

bool IsMatchingCoveredReference(const Multigraph& g) {
  if (g.num_vertices() < 2 || !IsConnected(g)) return false;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!HasPmContaining(g, e)) return false;
  }
  return HasPerfectMatching(g);
}

}  // namespace

bool IsMatchingCoveredOn(const BitAdjacency& adj, VertexSet active) {
  if (Size(active) < 2 || Size(active) % 2 != 0) return false;
  if (!IsConnectedWithin(adj, active)) return false;
  std::array<VertexSet, kMaxVertices> allowed;
  if (!AllowedNeighbors(adj, active, allowed)) return false;
  bool covered = true;
  ForEach(active, [&](VertexId v) {
    covered = covered && allowed[v] == (adj.rows[v] & active);
  });
  return covered;
}

bool IsMatchingCovered(const Multigraph& g) {
  return IsMatchingCoveredOn(g.adjacency(), g.all_vertices());
}

bool IsRemovableEdge(const Multigraph& g, EdgeId e) {
  g.check_edge(e);
  RequireMatchingCovered(g);
  const Edge& ed = g.edge(e);
  if (g.multiplicity(ed.u, ed.v) > 1) return true;
  BitAdjacency adj = g.adjacency();
  adj.remove(ed.u, ed.v);
  return IsMatchingCoveredOn(adj, g.all_vertices());
}

std::vector<EdgeId> RemovableEdges(const Multigraph& g) {
  RequireMatchingCovered(g);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.multiplicity(ed.u, ed.v) > 1) {
      out.push_back(e);
      continue;
    }
    BitAdjacency adj = g.adjacency();
    adj.remove(ed.u, ed.v);
    if (IsMatchingCoveredOn(adj, g.all_vertices())) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> RemovableDoubletons(const Multigraph& g) {
  const std::vector<EdgeId> removable = RemovableEdges(g);
  std::vector<EdgeId> rest;
  for (EdgeId e = 0, k = 0; e < g.num_edges(); ++e) {
    if (k < static_cast<EdgeId>(removable.size()) && removable[k] == e) {
      ++k;
    } else {
      rest.push_back(e);
    }
  }
  // Non-removable edges are never parallel, so deleting one clears its
  // adjacency bit.
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const Edge& a = g.edge(rest[i]);
    BitAdjacency without_a = g.adjacency();
    without_a.remove(a.u, a.v);
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      const Edge& b = g.edge(rest[j]);
      BitAdjacency adj = without_a;
      adj.remove(b.u, b.v);
      if (IsMatchingCoveredOn(adj, g.all_vertices())) {
        out.emplace_back(rest[i], rest[j]);
      }
    }
  }
  return out;
}

std::vector<RemovableClass> RemovableClasses(const Multigraph& g) {
  std::vector<RemovableClass> out;
  for (EdgeId e : RemovableEdges(g)) out.push_back(RemovableClass::Single(e));
  for (auto [e, f] : RemovableDoubletons(g)) {
    out.push_back(RemovableClass::Doubleton(e, f));
  }
  return out;
}

std::vector<EdgeId> RemovableEdgesReference(const Multigraph& g) {
  if (!IsMatchingCoveredReference(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (IsMatchingCoveredReference(DeleteEdge(g, e))) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> RemovableDoubletonsReference(
    const Multigraph& g) {
  if (!IsMatchingCoveredReference(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      const EdgeId pair[] = {e, f};
      if (!IsMatchingCoveredReference(DeleteEdges(g, pair).graph)) continue;
      if (IsMatchingCoveredReference(DeleteEdge(g, e))) continue;
      if (IsMatchingCoveredReference(DeleteEdge(g, f))) continue;
      out.emplace_back(e, f);
    }
  }
  return out;
}

bool IsBicritical(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n < 4 || n % 2 != 0) return false;
  const VertexSet all = g.all_vertices();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!HasPerfectMatchingOn(g.adjacency(), all & ~Bit(u) & ~Bit(v))) {
        return false;
      }
    }
  }
  return true;
}

bool IsBrick(const Multigraph& g) {
  return IsKConnected(g, 3) && IsBicritical(g);
}

bool IsMinimalMatchingCovered(const Multigraph& g) {
  return IsMatchingCovered(g) && RemovableEdges(g).empty();
}

std::optional<std::pair<EdgeId, EdgeId>> NearBipartitePair(
    const Multigraph& g) {
  RequireMatchingCovered(g);
  if (IsBipartite(g)) return std::nullopt;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      const EdgeId pair[] = {e, f};
      Multigraph rest = DeleteEdges(g, pair).graph;
      if (IsBipartite(rest) && IsMatchingCovered(rest)) {
        return std::make_pair(e, f);
      }
    }
  }
  return std::nullopt;
}

bool HasTwoNonadjacentRemovableEdges(const Multigraph& g) {
  const std::vector<EdgeId> removable = RemovableEdges(g);
  for (std::size_t i = 0; i < removable.size(); ++i) {
    const Edge& a = g.edge(removable[i]);
    for (std::size_t j = i + 1; j < removable.size(); ++j) {
      const Edge& b = g.edge(removable[j]);
      if (!a.touches(b.u) && !a.touches(b.v)) return true;
    }
  }
  return false;
}

}  // namespace mcg
