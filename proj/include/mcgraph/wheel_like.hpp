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


#ifndef MCGRAPH_WHEEL_LIKE_HPP_
#define MCGRAPH_WHEEL_LIKE_HPP_

#include <string>
#include <vector>

#include "mcgraph/multigraph.hpp"
#include "mcgraph/splice.hpp"

namespace mcg {

// Vertices h such that every removable class R has exactly one edge in the
// boundary of h. Empty means not wheel-like. Throws kNotABrick.
VertexSet WheelLikeHubs(const Multigraph& g);
// Same without the brick test; the caller guarantees g is a brick.
VertexSet WheelLikeHubsOfBrick(const Multigraph& g);
// Same answer from the full list of removable classes computed by the
// definitional reference routines.
VertexSet WheelLikeHubsReference(const Multigraph& g);
bool IsWheelLike(const Multigraph& g);

// Every edge at h is removable. Throws kNotMatchingCovered.
bool HubEdgesRemovable(const Multigraph& g, VertexId h);

// Underlying simple graph K4, every parallel edge on one vertex pair.
bool IsK4Plus(const Multigraph& g);

// Vertices that can serve as the hub of the wheel's structure: the
// designated hub for k >= 5, every vertex for k = 3.
VertexSet WheelHubCandidates(const WheelSpec& spec);

struct OddWheelSpliceReport {
  bool holds = true;
  int violated = 0;  // first failing condition, 0 when all hold
  std::string reason;
};

// Evaluates the hub-incidence, multiple-edge and rim-attachment conditions
// for splicing wheel g at u with wheel h at v. They hold when some choice of
// hubs satisfies all three; otherwise the report names the furthest
// condition reached. Throws kBadSpec, kNotOddWheels, kSpliceInvalid.
OddWheelSpliceReport CheckOddWheelSplice(const WheelSpec& g, VertexId u,
                                         const WheelSpec& h, VertexId v,
                                         const std::vector<int>& theta);

// Exact planarity for at most six vertices via Kuratowski subgraphs.
// Throws kBoundExceeded above six vertices.
bool IsPlanarSmall(const Multigraph& g);

}  // namespace mcg

#endif  // MCGRAPH_WHEEL_LIKE_HPP_
