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

#include "mcgraph/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>

#include "mcgraph/canonical.hpp"
#include "mcgraph/error.hpp"

namespace mcg {
namespace {

std::vector<Multigraph> Materialize(std::vector<std::string> forms) {
  std::sort(forms.begin(), forms.end());
  std::vector<Multigraph> out;
  out.reserve(forms.size());
  for (auto& f : forms) out.push_back(FromCanonical(CanonicalForm{std::move(f)}));
  return out;
}

// Connected graphs on n vertices, all minimum degrees. With `bipartite`
// set, only bipartite ones: a connected bipartite graph minus a non-cut
// vertex is connected and bipartite, and the new vertex must see a single
// color class of its parent.
const std::vector<Multigraph>& ConnectedLevel(int n, bool bipartite) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<Multigraph>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, bipartite});
    if (it != cache.end()) return it->second;
  }
  std::vector<Multigraph> level;
  if (n == 1) {
    level.push_back(Multigraph(1, {}));
  } else {
    // Every connected graph has a non-cut vertex, so deleting it leaves a
    // connected parent on n - 1 vertices.
    const auto& parents = ConnectedLevel(n - 1, bipartite);
    std::unordered_set<std::string> seen;
    for (const Multigraph& parent : parents) {
      const VertexId fresh = n - 1;
      const VertexSet side = bipartite ? *Bipartition(parent) : 0;
      for (VertexSet nbrs = 1; nbrs < Bit(n - 1); ++nbrs) {
        if (bipartite && (nbrs & side) != 0 && (nbrs & ~side) != 0) continue;
        std::vector<Edge> edges = parent.edges();
        ForEach(nbrs, [&](VertexId w) { edges.push_back({w, fresh}); });
        seen.insert(Canonical(Multigraph(n, std::move(edges))).bytes);
      }
    }
    level = Materialize({seen.begin(), seen.end()});
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, bipartite), std::move(level))
      .first->second;
}

std::vector<Multigraph> Filtered(int n, int min_degree, int bound,
                                 bool bipartite) {
  if (n > bound || n > kMaxVertices) {
    throw Error(ErrorCode::kBoundExceeded,
                "enumeration order " + std::to_string(n) + " above bound " +
                    std::to_string(bound));
  }
  if (n <= 0) return {};
  std::vector<Multigraph> out;
  for (const Multigraph& g : ConnectedLevel(n, bipartite)) {
    if (g.min_degree() >= min_degree) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<Multigraph> EnumerateConnectedGraphs(int n, int min_degree,
                                                 int bound) {
  return Filtered(n, min_degree, bound, false);
}

std::vector<Multigraph> EnumerateConnectedBipartiteGraphs(int n, int min_degree,
                                                          int bound) {
  return Filtered(n, min_degree, bound, true);
}

std::vector<Multigraph> EnumerateConnectedGraphsBruteForce(int n,
                                                           int min_degree) {
  if (n > 7) {
    throw Error(ErrorCode::kBoundExceeded, "labeled brute force above n = 7");
  }
  if (n <= 0) return {};
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) slots.push_back({i, j});
  }
  std::set<std::string> forms;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1) edges.push_back(slots[k]);
    }
    Multigraph g(n, std::move(edges));
    if (!IsConnected(g) || g.min_degree() < min_degree) continue;
    forms.insert(Canonical(g).bytes);
  }
  return Materialize({forms.begin(), forms.end()});
}

std::vector<Multigraph> ParallelVariants(const Multigraph& simple,
                                         int max_multiplicity) {
  const Multigraph base = UnderlyingSimple(simple);
  const int m = base.num_edges();
  std::unordered_set<std::string> seen;
  std::vector<int> mult(m, 1);
  while (true) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < mult[i]; ++k) edges.push_back(base.edge(i));
    }
    seen.insert(Canonical(Multigraph(base.num_vertices(), std::move(edges))).bytes);
    int i = 0;
    while (i < m && mult[i] == max_multiplicity) mult[i++] = 1;
    if (i == m) break;
    ++mult[i];
  }
  return Materialize({seen.begin(), seen.end()});
}

std::vector<Multigraph> HubParallelVariants(const Multigraph& simple,
                                            int max_multiplicity) {
  const Multigraph base = UnderlyingSimple(simple);
  std::unordered_set<std::string> seen;
  for (VertexId h = 0; h < base.num_vertices(); ++h) {
    const auto star = base.incident_edges(h);
    std::vector<int> mult(star.size(), 1);
    while (true) {
      int i = 0;
      const int d = static_cast<int>(star.size());
      while (i < d && mult[i] == max_multiplicity) mult[i++] = 1;
      if (i == d) break;
      ++mult[i];
      std::vector<Edge> edges = base.edges();
      for (int j = 0; j < d; ++j) {
        for (int k = 1; k < mult[j]; ++k) edges.push_back(base.edge(star[j]));
      }
      seen.insert(Canonical(Multigraph(base.num_vertices(), std::move(edges))).bytes);
    }
  }
  return Materialize({seen.begin(), seen.end()});
}

}  // namespace mcg
