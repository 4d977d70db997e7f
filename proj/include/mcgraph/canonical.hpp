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

#ifndef MCGRAPH_CANONICAL_HPP_
#define MCGRAPH_CANONICAL_HPP_

#include <string>
#include <vector>

#include "mcgraph/multigraph.hpp"

namespace mcg {

// Byte string: vertex count followed by the upper triangle of the
// multiplicity matrix under the canonical relabeling. Two multigraphs are
// isomorphic iff their forms are equal.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // labeling[i] = original vertex placed at canonical position i.
  std::vector<VertexId> labeling;
  // Generators of the automorphism group found during the search.
  std::vector<std::vector<VertexId>> automorphisms;
};

// Individualization-refinement search with automorphism pruning. Degree and
// parallel-edge multiplicities are folded into the initial partition.
CanonicalLabeling CanonicalLabel(const Multigraph& g);
CanonicalForm Canonical(const Multigraph& g);
bool IsIsomorphic(const Multigraph& a, const Multigraph& b);

// Rebuilds the (canonically labeled) multigraph a form describes.
Multigraph FromCanonical(const CanonicalForm& form);

// Applies a vertex permutation: vertex v becomes perm[v].
Multigraph Relabel(const Multigraph& g, const std::vector<VertexId>& perm);

// Orbits of the vertex set under the group generated by `generators`,
// as a representative per vertex (the smallest vertex of its orbit).
std::vector<VertexId> OrbitRepresentatives(
    int n, const std::vector<std::vector<VertexId>>& generators);

std::string ToHex(const CanonicalForm& form);

}  // namespace mcg

#endif  // MCGRAPH_CANONICAL_HPP_
