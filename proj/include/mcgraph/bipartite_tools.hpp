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

#ifndef MCGRAPH_BIPARTITE_TOOLS_HPP_
#define MCGRAPH_BIPARTITE_TOOLS_HPP_

#include <optional>
#include <vector>

#include "mcgraph/multigraph.hpp"
#include "mcgraph/vertex_set.hpp"

namespace mcg {

inline constexpr int kPSetBound = 20;

// Color classes of a bipartite matching covered graph. Throws NotBipartiteMC.
struct ColorClasses {
  VertexSet a = 0;  // the class holding vertex 0
  VertexSet b = 0;
};
ColorClasses RequireBipartiteMC(const Multigraph& g);

struct PSet {
  VertexSet x = 0;
  bool a_side = false;  // |E[X∩A, X̄∩B]| = 1
  bool b_side = false;  // |E[X̄∩A, X∩B]| = 1
};

std::optional<PSet> AsPSet(const Multigraph& g, const ColorClasses& cls,
                           VertexSet x);
bool IsPSet(const Multigraph& g, VertexSet x);
// All P-sets in increasing bitmask order. Needs at least 4 vertices and at
// most kPSetBound.
std::vector<PSet> AllPSets(const Multigraph& g);
// Smallest P-set; ties go to the lexicographically least vertex list.
std::optional<PSet> MinimumPSet(const Multigraph& g);

// (A1, B1) with u in A1, v in B \ B1, E[A1, B \ B1] = {uv}, G[A1 ∪ B1]
// matching covered, where uv is the edge as stored and A is the class of u.
struct NonRemovabilityCertificate {
  VertexSet a1 = 0;
  VertexSet b1 = 0;
};

std::optional<NonRemovabilityCertificate> FindNonRemovabilityCertificate(
    const Multigraph& g, EdgeId e);
bool CheckNonRemovabilityCertificate(const Multigraph& g, EdgeId e,
                                     const NonRemovabilityCertificate& cert);

struct BipartiteRemovability {
  bool removable = false;
  std::optional<NonRemovabilityCertificate> certificate;
};
BipartiteRemovability IsRemovableBipartite(const Multigraph& g, EdgeId e);

// Tightness from color-class counts alone.
bool IsTightBipartite(const Multigraph& g, VertexSet x);

struct BarrierContraction {
  Multigraph h;
  VertexSet b_side = 0;  // barrier vertices, placed first in h
  VertexSet i_side = 0;
  // members[w]: original vertices represented by vertex w of h.
  std::vector<VertexSet> members;
  // edge_origin[f]: the edge of G that edge f of h came from.
  std::vector<EdgeId> edge_origin;
};

// H(G,B) for a maximal nontrivial barrier B of a nonbipartite matching
// covered graph.
BarrierContraction ContractBarrier(const Multigraph& g, VertexSet b);
// I-vertices of H incident with a removable edge of H.
VertexSet WSet(const BarrierContraction& bc);

}  // namespace mcg

#endif  // MCGRAPH_BIPARTITE_TOOLS_HPP_
