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

#include "mcgraph/parallel.hpp"

#include <omp.h>

#include <atomic>

#include "mcgraph/error.hpp"
#include "mcgraph/matching.hpp"
#include "mcgraph/mc_core.hpp"

namespace mcg {
namespace {

std::atomic<int> g_workers{0};

}  // namespace

void SetWorkerCount(int workers) {
  if (workers < 0) {
    throw Error(ErrorCode::kBadSpec, "worker count must be nonnegative");
  }
  g_workers = workers;
}

int WorkerCount() {
  const int w = g_workers;
  return w > 0 ? w : omp_get_max_threads();
}

std::vector<EdgeId> RemovableEdgesParallel(const Multigraph& g) {
  if (!IsMatchingCovered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  const std::vector<char> keep = ParallelMap<char>(
      g.num_edges(), [&](std::size_t i) -> char {
        const Edge& ed = g.edge(static_cast<EdgeId>(i));
        if (g.multiplicity(ed.u, ed.v) > 1) return 1;
        BitAdjacency adj = g.adjacency();
        adj.remove(ed.u, ed.v);
        return IsMatchingCoveredOn(adj, g.all_vertices()) ? 1 : 0;
      });
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (keep[e]) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> RemovableDoubletonsParallel(
    const Multigraph& g) {
  const std::vector<EdgeId> removable = RemovableEdgesParallel(g);
  std::vector<char> is_removable(g.num_edges(), 0);
  for (EdgeId e : removable) is_removable[e] = 1;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!is_removable[e]) rest.push_back(e);
  }
  // One work item per first edge; rows are concatenated in order.
  const auto rows = ParallelMap<std::vector<std::pair<EdgeId, EdgeId>>>(
      rest.size(), [&](std::size_t i) {
        std::vector<std::pair<EdgeId, EdgeId>> row;
        const Edge& a = g.edge(rest[i]);
        BitAdjacency without_a = g.adjacency();
        without_a.remove(a.u, a.v);
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          const Edge& b = g.edge(rest[j]);
          BitAdjacency adj = without_a;
          adj.remove(b.u, b.v);
          if (IsMatchingCoveredOn(adj, g.all_vertices())) {
            row.emplace_back(rest[i], rest[j]);
          }
        }
        return row;
      });
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

bool IsBicriticalParallel(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n < 4 || n % 2 != 0) return false;
  const VertexSet all = g.all_vertices();
  const std::vector<char> ok =
      ParallelMap<char>(n, [&](std::size_t i) -> char {
        const VertexId u = static_cast<VertexId>(i);
        for (VertexId v = u + 1; v < n; ++v) {
          if (!HasPerfectMatchingOn(g.adjacency(), all & ~Bit(u) & ~Bit(v))) {
            return 0;
          }
        }
        return 1;
      });
  for (char c : ok) {
    if (!c) return false;
  }
  return true;
}

}  // namespace mcg
