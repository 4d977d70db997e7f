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

#include "mcgraph/named_graphs.hpp"

#include <vector>

namespace mcg {

Multigraph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph Cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph PathGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, std::move(edges));
}

Multigraph Star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Multigraph(leaves + 1, std::move(edges));
}

Multigraph CompleteBipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Multigraph(a + b, std::move(edges));
}

Multigraph TriangularPrism() {
  return Multigraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                        {0, 3}, {1, 4}, {2, 5}});
}

Multigraph Petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Multigraph(10, std::move(edges));
}

Multigraph Digon() { return Multigraph(2, {{0, 1}, {0, 1}}); }

Multigraph Wheel(int k) {
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({i, i % k + 1});
  for (int i = 1; i <= k; ++i) edges.push_back({0, i});
  return Multigraph(k + 1, std::move(edges));
}

}  // namespace mcg
