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

#include "mcgraph/bipartite_tools.hpp"
#include "mcgraph/cuts.hpp"
#include "mcgraph/enumerate.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/mc_core.hpp"
#include "mcgraph/named_graphs.hpp"
#include "test_support.hpp"

namespace mcg {
namespace {

std::vector<Multigraph> BipartiteMCGraphs(int max_n, int max_multiplicity) {
  std::vector<Multigraph> out;
  for (const Multigraph& g : testing::BipartiteMatchingCoveredGraphs(max_n)) {
    for (Multigraph& v : ParallelVariants(g, max_multiplicity)) {
      out.push_back(std::move(v));
    }
  }
  return out;
}

TEST(PSetTest, Cycle6) {
  // C6 = 0..5 around; A = {0,2,4}. X = {0,1}: E[X∩A, X̄∩B] = {05}.
  Multigraph c6 = Cycle(6);
  EXPECT_TRUE(IsPSet(c6, 0b000011));
  EXPECT_TRUE(IsPSet(c6, 0b111100));
  EXPECT_FALSE(IsPSet(c6, 0b000111));  // unbalanced
  EXPECT_FALSE(IsPSet(c6, 0b001001));  // 0 and 3: two edges each way
  auto min = MinimumPSet(c6);
  ASSERT_TRUE(min.has_value());
  EXPECT_EQ(min->x, VertexSet{0b000011});
}

TEST(PSetTest, ComplementSymmetry) {
  for (const Multigraph& g : BipartiteMCGraphs(8, 2)) {
    if (g.num_vertices() < 4) continue;
    for (const PSet& p : AllPSets(g)) {
      EXPECT_TRUE(IsPSet(g, g.all_vertices() & ~p.x));
    }
  }
}

TEST(PSetTest, CompleteBipartite33HasNone) {
  EXPECT_TRUE(AllPSets(CompleteBipartite(3, 3)).empty());
  EXPECT_FALSE(MinimumPSet(CompleteBipartite(3, 3)).has_value());
}

TEST(PSetTest, Errors) {
  try {
    AllPSets(CompleteGraph(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBipartiteMC);
  }
  try {
    AllPSets(CompleteGraph(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

TEST(RemovableBipartiteTest, Examples) {
  Multigraph c6 = Cycle(6);
  for (EdgeId e = 0; e < 6; ++e) {
    BipartiteRemovability r = IsRemovableBipartite(c6, e);
    EXPECT_FALSE(r.removable);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_TRUE(CheckNonRemovabilityCertificate(c6, e, *r.certificate));
  }
  Multigraph k33 = CompleteBipartite(3, 3);
  for (EdgeId e = 0; e < 9; ++e) {
    BipartiteRemovability r = IsRemovableBipartite(k33, e);
    EXPECT_TRUE(r.removable);
    EXPECT_FALSE(r.certificate.has_value());
  }
  Multigraph square(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(IsRemovableBipartite(square, 0).removable);
  EXPECT_TRUE(IsRemovableBipartite(square, 1).removable);
  EXPECT_FALSE(IsRemovableBipartite(square, 2).removable);
}

TEST(RemovableBipartiteTest, CertificateExistsIffNonRemovable) {
  int nonremovable = 0;
  for (const Multigraph& g : BipartiteMCGraphs(10, 1)) {
    if (g.num_edges() < 2) continue;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const bool removable = IsRemovableEdge(g, e);
      auto cert = FindNonRemovabilityCertificate(g, e);
      EXPECT_EQ(!removable, cert.has_value()) << EncodeMg(g) << " edge " << e;
      nonremovable += !removable;
    }
  }
  EXPECT_GT(nonremovable, 100);
}

TEST(RemovableBipartiteTest, CertificateExistsIffNonRemovableWithParallels) {
  for (const Multigraph& g : BipartiteMCGraphs(6, 2)) {
    if (g.num_edges() < 2) continue;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(!IsRemovableEdge(g, e),
                FindNonRemovabilityCertificate(g, e).has_value())
          << EncodeMg(g);
    }
  }
}

TEST(TightBipartiteTest, Examples) {
  EXPECT_TRUE(IsTightBipartite(Cycle(6), 0b000111));
  EXPECT_FALSE(IsTightBipartite(Cycle(6), 0b000011));
  EXPECT_FALSE(IsTightBipartite(Cycle(6), 0b010101));
}

TEST(TightBipartiteTest, AgreesWithPerfectMatchingDefinition) {
  for (const Multigraph& g : BipartiteMCGraphs(8, 1)) {
    PerfectMatchingTable table(g);
    for (VertexSet x = 1; x < g.all_vertices(); ++x) {
      EXPECT_EQ(IsTightBipartite(g, x), table.IsTight(x)) << EncodeMg(g);
    }
  }
}

TEST(HallTypeTest, ClosedSetsAreUnbalanced) {
  for (const Multigraph& g : BipartiteMCGraphs(8, 1)) {
    const ColorClasses cls = RequireBipartiteMC(g);
    for (const ColorClasses& side : {cls, ColorClasses{cls.b, cls.a}}) {
      for (VertexSet x = 0; x <= g.all_vertices(); ++x) {
        VertexSet nbrs = 0;
        ForEach(x & side.a, [&](VertexId v) { nbrs |= g.neighbor_set(v); });
        if ((nbrs & ~(x & side.b)) != 0) continue;
        const int in_a = Size(x & side.a);
        const int in_b = Size(x & side.b);
        EXPECT_LE(in_a, in_b);
        EXPECT_EQ(in_a == in_b, x == 0 || x == g.all_vertices());
      }
    }
  }
}

TEST(MinimumPSetTest, InsideEdgesAreRemovable) {
  int checked = 0;
  std::vector<Multigraph> graphs = BipartiteMCGraphs(6, 3);
  for (Multigraph& g : BipartiteMCGraphs(8, 1)) {
    if (g.num_vertices() == 8) graphs.push_back(std::move(g));
  }
  for (const Multigraph& g : graphs) {
    if (g.num_vertices() < 4 || g.min_degree() < 3) continue;
    auto p = MinimumPSet(g);
    if (!p) continue;
    ++checked;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (Contains(p->x, ed.u) && Contains(p->x, ed.v)) {
        EXPECT_TRUE(IsRemovableEdge(g, e)) << EncodeMg(g);
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(BarrierContractionTest, HandBuiltInstance) {
  // Two triangles {1,2,3} and {4,5,6} attached to B = {0,7}.
  Multigraph g(8, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                   {0, 1}, {0, 4}, {7, 3}, {7, 6}, {0, 2}, {7, 5}});
  ASSERT_TRUE(IsMatchingCovered(g));
  BarrierContraction bc = ContractBarrier(g, Bit(0) | Bit(7));
  // Hand contraction: vertices 0, 7, then the two triangles.
  EXPECT_EQ(bc.h.num_vertices(), 4);
  EXPECT_EQ(bc.members, (std::vector<VertexSet>{Bit(0), Bit(7), 0b1110, 0b1110000}));
  EXPECT_EQ(bc.h.multiplicity(0, 2), 2);
  EXPECT_EQ(bc.h.multiplicity(0, 3), 1);
  EXPECT_EQ(bc.h.multiplicity(1, 2), 1);
  EXPECT_EQ(bc.h.multiplicity(1, 3), 2);
  EXPECT_TRUE(IsBipartite(bc.h));
  EXPECT_TRUE(IsMatchingCovered(bc.h));
  EXPECT_EQ(bc.edge_origin.size(), 6u);
  // The doubled edges are removable; both triangle vertices of H touch one.
  EXPECT_EQ(WSet(bc), VertexSet{0b1100});
}

TEST(BarrierContractionTest, Errors) {
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParseError;
  };
  EXPECT_EQ(code([] { ContractBarrier(Cycle(6), 0b010101); }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code([] { ContractBarrier(CompleteGraph(4), 0b0011); }),
            ErrorCode::kNotABarrier);
  EXPECT_EQ(code([] { ContractBarrier(CompleteGraph(4), 0b0001); }),
            ErrorCode::kBarrierTrivial);
}

TEST(BarrierContractionTest, AlwaysBipartiteMatchingCovered) {
  int checked = 0;
  for (const Multigraph& g : testing::MatchingCoveredGraphs(8)) {
    if (IsBipartite(g)) continue;
    for (const Barrier& b : MaximalBarriers(g)) {
      if (Size(b.set) < 2) continue;
      BarrierContraction bc = ContractBarrier(g, b.set);
      EXPECT_TRUE(IsBipartite(bc.h));
      EXPECT_TRUE(IsMatchingCovered(bc.h)) << EncodeMg(g);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace mcg
