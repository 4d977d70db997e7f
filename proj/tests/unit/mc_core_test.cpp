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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mcgraph/canonical.hpp"
#include "mcgraph/enumerate.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/matching.hpp"
#include "mcgraph/mc_core.hpp"
#include "mcgraph/multigraph.hpp"
#include "mcgraph/named_graphs.hpp"
#include "test_support.hpp"

namespace mcg {
namespace {

TEST(MatchingCoveredTest, Examples) {
  EXPECT_TRUE(IsMatchingCovered(CompleteGraph(2)));
  EXPECT_TRUE(IsMatchingCovered(Cycle(6)));
  EXPECT_TRUE(IsMatchingCovered(CompleteGraph(4)));
  EXPECT_TRUE(IsMatchingCovered(TriangularPrism()));
  EXPECT_TRUE(IsMatchingCovered(Wheel(5)));
  EXPECT_TRUE(IsMatchingCovered(Digon()));
  EXPECT_FALSE(IsMatchingCovered(PathGraph(4)));
  EXPECT_FALSE(IsMatchingCovered(Multigraph(1, {})));
  EXPECT_FALSE(IsMatchingCovered(Multigraph(4, {{0, 1}, {2, 3}})));
  Multigraph k4_pendant(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                            {3, 4}});
  EXPECT_FALSE(IsMatchingCovered(k4_pendant));
}

TEST(MatchingCoveredTest, AgreesWithDefinition) {
  std::mt19937_64 rng(41);
  int positives = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    Multigraph g = testing::RandomConnectedGraph(n, 0.55, rng, 2);
    bool definitional = IsConnected(g) && n >= 2;
    for (EdgeId e = 0; definitional && e < g.num_edges(); ++e) {
      definitional = HasPmContaining(g, e);
    }
    EXPECT_EQ(IsMatchingCovered(g), definitional) << EncodeMg(g);
    positives += definitional;
  }
  EXPECT_GT(positives, 100);
}

TEST(RemovableTest, WheelSpokesAndRim) {
  Multigraph w5 = Wheel(5);
  for (EdgeId e = 0; e < 5; ++e) EXPECT_FALSE(IsRemovableEdge(w5, e));
  for (EdgeId e = 5; e < 10; ++e) EXPECT_TRUE(IsRemovableEdge(w5, e));
  EXPECT_EQ(RemovableEdges(w5), (std::vector<EdgeId>{5, 6, 7, 8, 9}));
  EXPECT_TRUE(RemovableDoubletons(w5).empty());
  EXPECT_EQ(RemovableClasses(w5).size(), 5u);
}

TEST(RemovableTest, K4HasThreeDoubletons) {
  Multigraph k4 = CompleteGraph(4);
  EXPECT_TRUE(RemovableEdges(k4).empty());
  auto d = RemovableDoubletons(k4);
  ASSERT_EQ(d.size(), 3u);
  for (auto [e, f] : d) {
    const Edge& a = k4.edge(e);
    const Edge& b = k4.edge(f);
    EXPECT_FALSE(a.touches(b.u) || a.touches(b.v));
  }
}

TEST(RemovableTest, PrismHasThreeTriangleDoubletons) {
  Multigraph prism = TriangularPrism();
  EXPECT_TRUE(RemovableEdges(prism).empty());
  auto d = RemovableDoubletons(prism);
  ASSERT_EQ(d.size(), 3u);
  for (auto [e, f] : d) {
    // One edge from each triangle.
    const Edge& a = prism.edge(e);
    const Edge& b = prism.edge(f);
    EXPECT_TRUE((a.u < 3 && a.v < 3 && b.u >= 3 && b.v >= 3) ||
                (b.u < 3 && b.v < 3 && a.u >= 3 && a.v >= 3));
  }
}

TEST(RemovableTest, NotMatchingCoveredThrows) {
  try {
    RemovableEdges(PathGraph(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMatchingCovered);
  }
}

TEST(RemovableTest, FastAgreesWithReference) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 1500 && checked < 250; ++trial) {
    const int n = 2 * (2 + static_cast<int>(rng() % 4));
    Multigraph g = testing::RandomConnectedGraph(n, 0.6, rng, 2);
    if (!IsMatchingCovered(g)) continue;
    ++checked;
    EXPECT_EQ(RemovableEdges(g), RemovableEdgesReference(g)) << EncodeMg(g);
    EXPECT_EQ(RemovableDoubletons(g), RemovableDoubletonsReference(g))
        << EncodeMg(g);
  }
  EXPECT_GE(checked, 200);
}

TEST(RemovableTest, ParallelEdgesAreRemovable) {
  for (const Multigraph& simple : EnumerateConnectedGraphs(6, 2)) {
    if (!IsMatchingCovered(simple)) continue;
    for (const Multigraph& g : ParallelVariants(simple, 2)) {
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (g.multiplicity(ed.u, ed.v) > 1) {
          EXPECT_TRUE(IsRemovableEdge(g, e));
        }
      }
      for (auto [e, f] : RemovableDoubletons(g)) {
        EXPECT_EQ(g.multiplicity(g.edge(e).u, g.edge(e).v), 1);
        EXPECT_EQ(g.multiplicity(g.edge(f).u, g.edge(f).v), 1);
      }
    }
  }
}

TEST(RemovableTest, SinglesAndDoubletonsAreDisjoint) {
  for (const Multigraph& g : EnumerateConnectedGraphs(8, 3)) {
    if (!IsMatchingCovered(g)) continue;
    std::vector<EdgeId> singles = RemovableEdges(g);
    for (auto [e, f] : RemovableDoubletons(g)) {
      EXPECT_FALSE(std::binary_search(singles.begin(), singles.end(), e));
      EXPECT_FALSE(std::binary_search(singles.begin(), singles.end(), f));
    }
  }
}

TEST(BrickTest, Examples) {
  EXPECT_TRUE(IsBicritical(CompleteGraph(4)));
  EXPECT_FALSE(IsBicritical(Cycle(6)));
  EXPECT_TRUE(IsBicritical(TriangularPrism()));
  EXPECT_FALSE(IsBicritical(CompleteGraph(2)));
  EXPECT_TRUE(IsBrick(CompleteGraph(4)));
  EXPECT_TRUE(IsBrick(TriangularPrism()));
  EXPECT_TRUE(IsBrick(Wheel(5)));
  EXPECT_TRUE(IsBrick(Petersen()));
  EXPECT_FALSE(IsBrick(Cycle(6)));
  EXPECT_FALSE(IsBrick(CompleteBipartite(3, 3)));
}

TEST(BrickTest, BipartiteGraphsAreNeverBricks) {
  for (int n = 4; n <= 8; n += 2) {
    for (const Multigraph& g : EnumerateConnectedGraphs(n, 2)) {
      if (IsBipartite(g)) EXPECT_FALSE(IsBrick(g));
    }
  }
}

TEST(BrickTest, SmallBricksHaveManyClasses) {
  int bricks = 0;
  for (int n = 4; n <= 8; n += 2) {
    for (const Multigraph& g : EnumerateConnectedGraphs(n, 3)) {
      if (!IsBrick(g)) continue;
      ++bricks;
      EXPECT_GE(static_cast<int>(RemovableClasses(g).size()), g.max_degree());
      const bool exceptional = IsIsomorphic(g, CompleteGraph(4)) ||
                               IsIsomorphic(g, TriangularPrism());
      EXPECT_EQ(RemovableEdges(g).empty(), exceptional) << EncodeMg(g);
    }
  }
  EXPECT_GT(bricks, 10);
}

TEST(MinimalTest, Examples) {
  EXPECT_TRUE(IsMinimalMatchingCovered(Cycle(6)));
  EXPECT_TRUE(IsMinimalMatchingCovered(CompleteGraph(4)));
  EXPECT_TRUE(IsMinimalMatchingCovered(TriangularPrism()));
  EXPECT_FALSE(IsMinimalMatchingCovered(Wheel(5)));
  EXPECT_FALSE(IsMinimalMatchingCovered(PathGraph(4)));
}

TEST(NearBipartiteTest, Examples) {
  auto k4 = NearBipartitePair(CompleteGraph(4));
  ASSERT_TRUE(k4.has_value());
  Multigraph rest = DeleteEdges(CompleteGraph(4),
                                std::vector<EdgeId>{k4->first, k4->second})
                        .graph;
  EXPECT_TRUE(IsIsomorphic(rest, Cycle(4)));

  auto prism = NearBipartitePair(TriangularPrism());
  ASSERT_TRUE(prism.has_value());
  Multigraph prism_rest =
      DeleteEdges(TriangularPrism(),
                  std::vector<EdgeId>{prism->first, prism->second})
          .graph;
  EXPECT_TRUE(IsBipartite(prism_rest));
  EXPECT_TRUE(IsMatchingCovered(prism_rest));

  EXPECT_FALSE(NearBipartitePair(Petersen()).has_value());
}

}  // namespace
}  // namespace mcg
