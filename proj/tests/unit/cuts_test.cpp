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

#include "mcgraph/cuts.hpp"
#include "mcgraph/decomposition.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/mc_core.hpp"
#include "mcgraph/named_graphs.hpp"
#include "test_support.hpp"

namespace mcg {
namespace {

constexpr VertexSet kTriangle = 0b000111;

TEST(TightTest, Examples) {
  Multigraph prism = TriangularPrism();
  for (VertexId v = 0; v < 6; ++v) EXPECT_TRUE(IsTight(prism, Bit(v)));
  EXPECT_FALSE(IsTight(prism, kTriangle));
  EXPECT_EQ(PerfectMatchingTable(prism).MaxCrossing(kTriangle), 3);
  EXPECT_TRUE(IsTight(Cycle(6), 0b000111));
  EXPECT_FALSE(IsTight(Cycle(6), 0b000011));
}

TEST(TightTest, Errors) {
  try {
    IsTight(PathGraph(4), 0b0111);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMatchingCovered);
  }
  try {
    IsTight(Cycle(6), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyShore);
  }
}

TEST(SeparatingTest, Examples) {
  EXPECT_TRUE(IsSeparating(TriangularPrism(), kTriangle));
  EXPECT_FALSE(IsSeparating(Cycle(6), 0b000011));
  EXPECT_TRUE(IsSeparating(Cycle(6), 0b000111));
  EXPECT_TRUE(IsRobust(TriangularPrism(), kTriangle));
  EXPECT_FALSE(IsRobust(Cycle(6), 0b000111));
  EXPECT_EQ(ClassifyCut(TriangularPrism(), kTriangle), CutKind::kRobust);
  EXPECT_EQ(ClassifyCut(Cycle(6), 0b000111), CutKind::kTight);
  EXPECT_EQ(ClassifyCut(Cycle(6), 0b000001), CutKind::kTrivial);
  EXPECT_EQ(ClassifyCut(Cycle(6), 0b001011), CutKind::kNonSeparating);
}

TEST(SeparatingTest, BitmaskContractionAgreesWithMultigraphContraction) {
  for (const Multigraph& g : testing::MatchingCoveredGraphs(8, 2)) {
    const VertexSet all = g.all_vertices();
    ForEachNontrivialOddShore(g.num_vertices(), [&](VertexSet x) {
      EXPECT_EQ(ContractionIsMatchingCovered(g.adjacency(), all, x),
                IsMatchingCovered(Contract(g, x).graph));
      return true;
    });
  }
}

TEST(ShoreEnumerationTest, CountsOddShoresOnce) {
  int count = 0;
  ForEachNontrivialOddShore(8, [&](VertexSet x) {
    EXPECT_TRUE(Contains(x, 0));
    EXPECT_EQ(Size(x) % 2, 1);
    ++count;
    return true;
  });
  // Shores containing vertex 0 of size 3 or 5: C(7,2) + C(7,4).
  EXPECT_EQ(count, 21 + 35);
}

TEST(BarrierTest, Examples) {
  std::vector<Barrier> k4 = Barriers(CompleteGraph(4));
  ASSERT_EQ(k4.size(), 4u);
  for (const Barrier& b : k4) EXPECT_EQ(Size(b.set), 1);
  for (const Barrier& b : Barriers(TriangularPrism())) EXPECT_EQ(Size(b.set), 1);
  EXPECT_TRUE(IsBarrier(Cycle(6), 0b010101));
  std::vector<Barrier> c6 = MaximalBarriers(Cycle(6));
  ASSERT_EQ(c6.size(), 2u);
  EXPECT_EQ(c6[0].set, VertexSet{0b010101});
  EXPECT_EQ(c6[1].set, VertexSet{0b101010});
  EXPECT_EQ(c6[0].odd_components.size(), 3u);
}

TEST(BarrierTest, BarrierCuts) {
  EdgeCut cut = BarrierCut(Cycle(6), 0b010101, Bit(1));
  EXPECT_EQ(cut.boundary.size(), 2u);
  EXPECT_TRUE(IsTrivialShore(Cycle(6), cut.shore));
  try {
    BarrierCut(Cycle(6), 0b000011, Bit(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotABarrier);
  }
  try {
    BarrierCut(Cycle(6), 0b010101, Bit(1) | Bit(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAComponent);
  }
  // C6 barrier {0,2} leaves odd component {1} and the path {3,4,5}.
  EXPECT_TRUE(IsSpecialBarrierCut(Cycle(6), 0b000101, 0b111000));
  EXPECT_TRUE(IsSpecialBarrierCut(Cycle(6), 0b000101, 0b000111));
  EXPECT_FALSE(IsSpecialBarrierCut(Cycle(6), 0b010101, Bit(1)));
}

TEST(TwoSeparationTest, Examples) {
  EXPECT_TRUE(TwoSeparations(CompleteGraph(4)).empty());
  using P = std::pair<VertexId, VertexId>;
  EXPECT_EQ(TwoSeparations(Cycle(6)), (std::vector<P>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_FALSE(IsTwoSeparation(Cycle(6), 0, 2));
  std::vector<EdgeCut> cuts = TwoSeparationCuts(Cycle(6), 0, 3);
  ASSERT_EQ(cuts.size(), 2u);
  EXPECT_EQ(cuts[0].shore, VertexSet{0b000111});
  EXPECT_EQ(cuts[1].shore, VertexSet{0b001110});
  try {
    TwoSeparationCuts(CompleteGraph(4), 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotA2Separation);
  }
}

TEST(TwoSeparationTest, ThreeComponentGroupings) {
  // Three K2 components hanging between u=0 and v=1.
  Multigraph g(8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1},
                   {0, 6}, {6, 7}, {7, 1}});
  ASSERT_TRUE(IsMatchingCovered(g));
  EXPECT_EQ(TwoSeparationCuts(g, 0, 1).size(), 6u);  // 3 groupings, 2 cuts each
}

// Structural facts checked over all simple matching covered graphs n <= 8.
class CutPropertiesTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    graphs_ = new std::vector<Multigraph>(testing::MatchingCoveredGraphs(8));
  }
  static void TearDownTestSuite() { delete graphs_; }
  static std::vector<Multigraph>* graphs_;
};
std::vector<Multigraph>* CutPropertiesTest::graphs_ = nullptr;

TEST_F(CutPropertiesTest, TightImpliesSeparatingAndShoresAreOdd) {
  for (const Multigraph& g : *graphs_) {
    const int n = g.num_vertices();
    if (n < 4) continue;
    PerfectMatchingTable table(g);
    for (VertexSet x = 1; x < g.all_vertices(); x += 2) {
      if (Size(x) % 2 == 0) {
        EXPECT_FALSE(IsSeparating(g, x));
        continue;
      }
      if (table.IsTight(x)) EXPECT_TRUE(IsSeparating(g, x)) << EncodeMg(g);
    }
  }
}

TEST_F(CutPropertiesTest, BarriersAreIndependentWithOddComponentsOnly) {
  for (const Multigraph& g : *graphs_) {
    for (const Barrier& b : Barriers(g)) {
      bool independent = true;
      ForEach(b.set, [&](VertexId v) {
        independent = independent && (g.neighbor_set(v) & b.set) == 0;
      });
      EXPECT_TRUE(independent) << EncodeMg(g);
      EXPECT_EQ(Components(g, g.all_vertices() & ~b.set).size(),
                b.odd_components.size());
    }
  }
}

TEST_F(CutPropertiesTest, BicriticalIffAllBarriersTrivial) {
  for (const Multigraph& g : *graphs_) {
    if (g.num_vertices() == 2) continue;
    std::vector<Barrier> bs = Barriers(g);
    const bool all_trivial = std::all_of(
        bs.begin(), bs.end(), [](const Barrier& b) { return Size(b.set) == 1; });
    EXPECT_EQ(IsBicritical(g), all_trivial) << EncodeMg(g);
  }
}

TEST_F(CutPropertiesTest, BicriticalCutPairsAreTwoSeparations) {
  for (const Multigraph& g : *graphs_) {
    if (g.num_vertices() == 2 || !IsBicritical(g)) continue;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
        const VertexSet rest = g.all_vertices() & ~(Bit(u) | Bit(v));
        if (Components(g, rest).size() > 1) {
          EXPECT_TRUE(IsTwoSeparation(g, u, v));
        }
      }
    }
  }
}

TEST_F(CutPropertiesTest, BarrierAndTwoSeparationCutsAreTight) {
  for (const Multigraph& g : *graphs_) {
    if (g.num_vertices() < 4) continue;
    PerfectMatchingTable table(g);
    for (const Barrier& b : Barriers(g)) {
      for (VertexSet q : b.odd_components) {
        EXPECT_TRUE(table.IsTight(BarrierCut(g, b.set, q).shore));
      }
    }
    for (auto [u, v] : TwoSeparations(g)) {
      for (const EdgeCut& c : TwoSeparationCuts(g, u, v)) {
        EXPECT_TRUE(table.IsTight(c.shore)) << EncodeMg(g);
      }
    }
  }
}

TEST_F(CutPropertiesTest, NearBrickTightCutsAreSpecialBarrierCuts) {
  int checked = 0;
  for (const Multigraph& g : *graphs_) {
    if (g.num_vertices() < 6 || !IsNearBrick(g)) continue;
    for (VertexSet x : NontrivialTightShores(g)) {
      EXPECT_TRUE(SpecialBarrierFor(g, x).has_value()) << EncodeMg(g);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST_F(CutPropertiesTest, ConnectedShorePruningIsExact) {
  for (const Multigraph& g : *graphs_) {
    EXPECT_EQ(NontrivialTightShores(g), NontrivialTightShoresReference(g));
  }
}

}  // namespace
}  // namespace mcg
