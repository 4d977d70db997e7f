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


#ifndef MCGRAPH_SPLICE_HPP_
#define MCGRAPH_SPLICE_HPP_

#include <functional>
#include <vector>

#include "mcgraph/multigraph.hpp"

namespace mcg {

// W_k with spoke i (to rim vertex i) repeated mults[i - 1] times. The hub is
// vertex 0 and rim vertex i is vertex i; rim edges {i, i % k + 1} come first,
// then the spokes in rim order.
struct WheelSpec {
  int k = 0;
  std::vector<int> mults;

  static WheelSpec Plain(int k);
  int hub_degree() const;
  friend bool operator==(const WheelSpec&, const WheelSpec&) = default;
  friend auto operator<=>(const WheelSpec&, const WheelSpec&) = default;
};

inline constexpr VertexId kWheelHub = 0;

// Throws kBadSpec unless k >= 3, mults.size() == k and every mult >= 1.
void ValidateWheelSpec(const WheelSpec& spec);
Multigraph MakeWheel(const WheelSpec& spec);

// One spec per isomorphism class of rim-k wheels with spoke multiplicities in
// [1, max_mult]: the lexicographically least vector under the dihedral group.
std::vector<WheelSpec> WheelSpecsUpToSymmetry(int k, int max_mult);

// theta[i] = j pairs the i-th edge of the boundary of v in h with the j-th
// edge of the boundary of u in g, both in ascending edge-id order. Vertices
// of g - u come first in the result, in order, then those of h - v. Edges of
// g - u, then of h - v, then one new edge per i.
struct SpliceResult {
  Multigraph graph;
  std::vector<VertexId> g_map;  // g vertex -> result vertex, -1 for u
  std::vector<VertexId> h_map;  // h vertex -> result vertex, -1 for v
};

// Throws kDegreeMismatch, kNotABijection.
SpliceResult SpliceWithMaps(const Multigraph& g, VertexId u, const Multigraph& h,
                            VertexId v, const std::vector<int>& theta);
Multigraph Splice(const Multigraph& g, VertexId u, const Multigraph& h,
                  VertexId v, const std::vector<int>& theta);

// All automorphisms of g that fix u, as vertex maps. Stops after `limit`
// maps; a partial list still yields correct (less reduced) orbit dedup.
std::vector<std::vector<VertexId>> AutomorphismsFixing(const Multigraph& g,
                                                       VertexId u,
                                                       int limit = 5040);

// How many new edges join each neighbor of u (rows, ascending) to each
// neighbor of v (columns, ascending). The splice result up to isomorphism
// depends only on this table.
struct SpliceTable {
  int rows = 0;
  int cols = 0;
  std::vector<int> cells;  // row-major

  int at(int r, int c) const { return cells[r * cols + c]; }
};

std::vector<int> ThetaFromTable(const Multigraph& g, VertexId u,
                                const Multigraph& h, VertexId v,
                                const SpliceTable& table);
SpliceTable TableFromTheta(const Multigraph& g, VertexId u, const Multigraph& h,
                           VertexId v, const std::vector<int>& theta);

// Visits one θ per orbit of splice tables under the automorphisms of g
// fixing u and of h fixing v (every table when dedupe is false). Stops
// early when visit returns false. Throws kDegreeMismatch.
void ForEachSpliceTheta(const Multigraph& g, VertexId u, const Multigraph& h,
                        VertexId v,
                        const std::function<bool(const std::vector<int>&)>& visit,
                        bool dedupe = true);
std::vector<std::vector<int>> SpliceThetas(const Multigraph& g, VertexId u,
                                           const Multigraph& h, VertexId v,
                                           bool dedupe = true);

// Smallest vertex of each automorphism orbit of g.
std::vector<VertexId> VertexOrbitRepresentatives(const Multigraph& g);

}  // namespace mcg

#endif  // MCGRAPH_SPLICE_HPP_
