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

#ifndef MCGRAPH_MULTIGRAPH_HPP_
#define MCGRAPH_MULTIGRAPH_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mcgraph/vertex_set.hpp"

namespace mcg {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return u == x || v == x; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loop-free multigraph with dense vertex ids [0, n) and dense edge ids
// [0, m). Edge i is edges()[i]; parallel edges are distinct ids with equal
// endpoints. Immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;
  // Throws kLoopEdge, kVertexOutOfRange, kBoundExceeded (n > kMaxVertices).
  Multigraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const EdgeId> incident_edges(VertexId v) const {
    return incident_[v];
  }
  int degree(VertexId v) const {
    return static_cast<int>(incident_[v].size());
  }
  int multiplicity(VertexId a, VertexId b) const;

  // Adjacency of the underlying simple graph.
  const BitAdjacency& adjacency() const { return adj_; }
  VertexSet neighbor_set(VertexId v) const { return adj_.rows[v]; }
  std::vector<VertexId> neighbors(VertexId v) const {
    return ToVector(adj_.rows[v]);
  }
  VertexSet all_vertices() const { return FullSet(n_); }

  int min_degree() const;
  int max_degree() const;
  bool is_simple() const;

  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  BitAdjacency adj_;
};

// G/X: X is replaced by a single vertex placed at the position of min(X);
// the remaining vertices keep their relative order.
struct ContractResult {
  Multigraph graph;
  VertexId contracted = 0;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex
  std::vector<EdgeId> edge_map;      // old edge -> new edge, -1 if internal
};

ContractResult Contract(const Multigraph& g, VertexSet x);

struct SubgraphResult {
  Multigraph graph;
  std::vector<VertexId> vertex_map;  // old -> new, -1 if dropped
  std::vector<EdgeId> edge_origin;   // new edge -> old edge
};

SubgraphResult InducedSubgraph(const Multigraph& g, VertexSet keep);
SubgraphResult DeleteEdges(const Multigraph& g, std::span<const EdgeId> doomed);
Multigraph DeleteEdge(const Multigraph& g, EdgeId e);
Multigraph UnderlyingSimple(const Multigraph& g);

// Edges with exactly one end in x.
std::vector<EdgeId> Boundary(const Multigraph& g, VertexSet x);
int BoundarySize(const Multigraph& g, VertexSet x);

bool IsConnected(const Multigraph& g);
std::vector<VertexSet> Components(const Multigraph& g, VertexSet active);
int OddComponents(const Multigraph& g, VertexSet removed);

// Minimum number of vertices whose removal disconnects the underlying simple
// graph or leaves a single vertex. Disconnected graphs give 0, K_n gives n-1.
int VertexConnectivity(const Multigraph& g);
bool IsKConnected(const Multigraph& g, int k);

// Color class containing the lowest vertex of every component, or nullopt
// when g is not bipartite.
std::optional<VertexSet> Bipartition(const Multigraph& g);
bool IsBipartite(const Multigraph& g);

// Vertices of maximum degree (multiplicity counted).
VertexSet MaxDegreeSet(const Multigraph& g);

}  // namespace mcg

#endif  // MCGRAPH_MULTIGRAPH_HPP_
