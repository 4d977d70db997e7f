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

#include "mcgraph/multigraph.hpp"

#include <algorithm>
#include <string>

#include "mcgraph/error.hpp"

namespace mcg {

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::kBoundExceeded,
                "vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  adj_.n = n;
  incident_.resize(n);
  for (EdgeId i = 0; i < num_edges(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + std::to_string(i) + " has an endpoint outside [0, " +
                      std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kLoopEdge,
                  "edge " + std::to_string(i) + " is a loop at " +
                      std::to_string(e.u));
    }
    incident_[e.u].push_back(i);
    incident_[e.v].push_back(i);
    adj_.add(e.u, e.v);
  }
}

int Multigraph::multiplicity(VertexId a, VertexId b) const {
  int count = 0;
  for (EdgeId e : incident_[a]) count += edges_[e].other(a) == b ? 1 : 0;
  return count;
}

int Multigraph::min_degree() const {
  int best = 0;
  for (VertexId v = 0; v < n_; ++v) {
    best = v == 0 ? degree(v) : std::min(best, degree(v));
  }
  return best;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Multigraph::is_simple() const {
  for (VertexId v = 0; v < n_; ++v) {
    if (degree(v) != Size(adj_.rows[v])) return false;
  }
  return true;
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in graph");
  }
}

void Multigraph::check_edge(EdgeId e) const {
  if (e < 0 || e >= num_edges()) {
    throw Error(ErrorCode::kEdgeOutOfRange,
                "edge " + std::to_string(e) + " not in graph");
  }
}

ContractResult Contract(const Multigraph& g, VertexSet x) {
  const int n = g.num_vertices();
  x &= g.all_vertices();
  if (x == 0) throw Error(ErrorCode::kEmptyShore, "contracted set is empty");
  ContractResult out;
  out.vertex_map.assign(n, -1);
  const VertexId anchor = Lowest(x);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == anchor) {
      out.contracted = next++;
    } else if (!Contains(x, v)) {
      out.vertex_map[v] = next++;
    }
  }
  ForEach(x, [&](VertexId v) { out.vertex_map[v] = out.contracted; });
  std::vector<Edge> edges;
  out.edge_map.assign(g.num_edges(), -1);
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (Contains(x, e.u) && Contains(x, e.v)) continue;
    out.edge_map[i] = static_cast<EdgeId>(edges.size());
    edges.push_back({out.vertex_map[e.u], out.vertex_map[e.v]});
  }
  out.graph = Multigraph(next, std::move(edges));
  return out;
}

SubgraphResult InducedSubgraph(const Multigraph& g, VertexSet keep) {
  SubgraphResult out;
  out.vertex_map.assign(g.num_vertices(), -1);
  int next = 0;
  ForEach(keep & g.all_vertices(),
          [&](VertexId v) { out.vertex_map[v] = next++; });
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (!Contains(keep, e.u) || !Contains(keep, e.v)) continue;
    out.edge_origin.push_back(i);
    edges.push_back({out.vertex_map[e.u], out.vertex_map[e.v]});
  }
  out.graph = Multigraph(next, std::move(edges));
  return out;
}

SubgraphResult DeleteEdges(const Multigraph& g,
                           std::span<const EdgeId> doomed) {
  std::vector<char> drop(g.num_edges(), 0);
  for (EdgeId e : doomed) {
    g.check_edge(e);
    drop[e] = 1;
  }
  SubgraphResult out;
  out.vertex_map.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.vertex_map[v] = v;
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    if (drop[i]) continue;
    out.edge_origin.push_back(i);
    edges.push_back(g.edge(i));
  }
  out.graph = Multigraph(g.num_vertices(), std::move(edges));
  return out;
}

Multigraph DeleteEdge(const Multigraph& g, EdgeId e) {
  const EdgeId one[] = {e};
  return DeleteEdges(g, one).graph;
}

Multigraph UnderlyingSimple(const Multigraph& g) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < g.num_vertices(); ++a) {
    ForEach(g.neighbor_set(a) & ~FullSet(a + 1),
            [&](VertexId b) { edges.push_back({a, b}); });
  }
  return Multigraph(g.num_vertices(), std::move(edges));
}

std::vector<EdgeId> Boundary(const Multigraph& g, VertexSet x) {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (Contains(x, e.u) != Contains(x, e.v)) out.push_back(i);
  }
  return out;
}

int BoundarySize(const Multigraph& g, VertexSet x) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    count += Contains(x, e.u) != Contains(x, e.v) ? 1 : 0;
  }
  return count;
}

bool IsConnected(const Multigraph& g) {
  return IsConnectedWithin(g.adjacency(), g.all_vertices());
}

std::vector<VertexSet> Components(const Multigraph& g, VertexSet active) {
  return ComponentsWithin(g.adjacency(), active & g.all_vertices());
}

int OddComponents(const Multigraph& g, VertexSet removed) {
  return OddComponentsWithin(g.adjacency(), g.all_vertices() & ~removed);
}

namespace {

// True if deleting some set of exactly `k` vertices disconnects the rest.
bool SomeCutOfSize(const BitAdjacency& adj, int n, int k) {
  if (k == 0) return !IsConnectedWithin(adj, FullSet(n));
  VertexSet s = FullSet(k);
  const VertexSet limit = Bit(n);
  while (s < limit) {
    if (!IsConnectedWithin(adj, FullSet(n) & ~s)) return true;
    // Next k-subset (Gosper).
    VertexSet c = s & (~s + 1);
    VertexSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

}  // namespace

int VertexConnectivity(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1 || !IsConnected(g)) return 0;
  for (int k = 1; k <= n - 2; ++k) {
    if (SomeCutOfSize(g.adjacency(), n, k)) return k;
  }
  return n - 1;
}

bool IsKConnected(const Multigraph& g, int k) {
  const int n = g.num_vertices();
  if (n <= k || !IsConnected(g)) return false;
  for (int j = 1; j < k; ++j) {
    if (SomeCutOfSize(g.adjacency(), n, j)) return false;
  }
  return true;
}

std::optional<VertexSet> Bipartition(const Multigraph& g) {
  const BitAdjacency& adj = g.adjacency();
  VertexSet side_a = 0;
  VertexSet side_b = 0;
  VertexSet unseen = g.all_vertices();
  while (unseen != 0) {
    VertexSet frontier = Bit(Lowest(unseen));
    side_a |= frontier;
    unseen &= ~frontier;
    bool on_a = true;
    while (frontier != 0) {
      VertexSet next = 0;
      ForEach(frontier, [&](VertexId v) { next |= adj.rows[v]; });
      VertexSet& mine = on_a ? side_a : side_b;
      VertexSet& theirs = on_a ? side_b : side_a;
      if ((next & mine) != 0) return std::nullopt;
      next &= unseen;
      theirs |= next;
      unseen &= ~next;
      frontier = next;
      on_a = !on_a;
    }
  }
  return side_a;
}

bool IsBipartite(const Multigraph& g) { return Bipartition(g).has_value(); }

VertexSet MaxDegreeSet(const Multigraph& g) {
  const int top = g.max_degree();
  VertexSet out = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == top) out |= Bit(v);
  }
  return out;
}

}  // namespace mcg
