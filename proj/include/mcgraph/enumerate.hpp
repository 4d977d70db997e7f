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

#ifndef MCGRAPH_ENUMERATE_HPP_
#define MCGRAPH_ENUMERATE_HPP_

#include <vector>

#include "mcgraph/multigraph.hpp"

namespace mcg {

inline constexpr int kDefaultEnumerationBound = 10;

// One canonically labeled representative per isomorphism class of connected
// simple graphs on n vertices with minimum degree >= min_degree, in ascending
// canonical-form order. Built by vertex augmentation of the connected graphs
// on n - 1 vertices with canonical-form deduplication; levels are cached.
// Throws kBoundExceeded when n > bound.
std::vector<Multigraph> EnumerateConnectedGraphs(
    int n, int min_degree, int bound = kDefaultEnumerationBound);

// Connected bipartite simple graphs, same contract as above.
inline constexpr int kDefaultBipartiteEnumerationBound = 12;
std::vector<Multigraph> EnumerateConnectedBipartiteGraphs(
    int n, int min_degree, int bound = kDefaultBipartiteEnumerationBound);

// Independent oracle: every labeled graph on n <= 7 vertices, deduplicated by
// canonical form. Same output contract as EnumerateConnectedGraphs.
std::vector<Multigraph> EnumerateConnectedGraphsBruteForce(int n,
                                                           int min_degree);

// Every multigraph (up to isomorphism) whose underlying simple graph is
// `simple` and whose edge multiplicities lie in [1, max_multiplicity].
std::vector<Multigraph> ParallelVariants(const Multigraph& simple,
                                         int max_multiplicity);

// Multigraphs whose parallel edges all meet one vertex: for every vertex h,
// every multiplicity vector in [1, max_multiplicity] on the edges at h other
// than all ones. Canonically deduplicated and sorted by canonical form.
std::vector<Multigraph> HubParallelVariants(const Multigraph& simple,
                                            int max_multiplicity);

}  // namespace mcg

#endif  // MCGRAPH_ENUMERATE_HPP_
