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

#ifndef MCGRAPH_NAMED_GRAPHS_HPP_
#define MCGRAPH_NAMED_GRAPHS_HPP_

#include "mcgraph/multigraph.hpp"

namespace mcg {

Multigraph CompleteGraph(int n);
Multigraph Cycle(int n);
Multigraph PathGraph(int n);
Multigraph Star(int leaves);  // center is vertex 0
Multigraph CompleteBipartite(int a, int b);  // sides [0, a) and [a, a + b)
// Triangles 0-1-2 and 3-4-5 with rungs i -- i + 3.
Multigraph TriangularPrism();
Multigraph Petersen();
Multigraph Digon();
// Hub 0 and rim 1..k; rim edges take ids 0..k-1, spokes k..2k-1.
Multigraph Wheel(int k);

}  // namespace mcg

#endif  // MCGRAPH_NAMED_GRAPHS_HPP_
