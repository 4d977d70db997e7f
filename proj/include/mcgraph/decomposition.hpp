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

#ifndef MCGRAPH_DECOMPOSITION_HPP_
#define MCGRAPH_DECOMPOSITION_HPP_

#include <optional>
#include <random>
#include <vector>

#include "mcgraph/canonical.hpp"
#include "mcgraph/multigraph.hpp"
#include "mcgraph/vertex_set.hpp"

namespace mcg {

inline constexpr int kSolidityBound = 14;

enum class PieceKind { kBrick, kBrace };
const char* PieceKindName(PieceKind kind);

struct DecompComponent {
  Multigraph graph;
  PieceKind kind = PieceKind::kBrick;
  // provenance[v]: the original vertices that vertex v of `graph` stands for.
  std::vector<VertexSet> provenance;
};

struct DecompResult {
  std::vector<DecompComponent> components;
  // Shores of the cuts used, as original vertex sets, in the order applied.
  std::vector<VertexSet> cut_trace;

  int brick_count() const;
  // Sorted (kind, canonical form of the underlying simple graph) pairs.
  // Decompositions are unique only up to edge multiplicities.
  std::vector<std::pair<PieceKind, CanonicalForm>> signature() const;
};

// All nontrivial tight shores, each normalized to contain vertex 0, in
// lexicographic order. Throws NotMatchingCovered.
std::vector<VertexSet> NontrivialTightShores(const Multigraph& g);
// Same search without the connected-shores pruning; a test oracle.
std::vector<VertexSet> NontrivialTightShoresReference(const Multigraph& g);

// Lexicographically least nontrivial tight shore, or a uniformly random one
// when `rng` is given.
std::optional<VertexSet> FindNontrivialTightCut(const Multigraph& g,
                                                std::mt19937_64* rng = nullptr);

DecompResult TightCutDecomposition(const Multigraph& g,
                                   std::mt19937_64* rng = nullptr);

bool IsBrace(const Multigraph& g);
int BrickCount(const Multigraph& g);
bool IsNearBrick(const Multigraph& g);
// Every separating cut is tight. Throws BoundExceeded above kSolidityBound.
bool IsSolid(const Multigraph& g);

}  // namespace mcg

#endif  // MCGRAPH_DECOMPOSITION_HPP_
