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

#include <random>
#include <set>

#include "mcgraph/canonical.hpp"
#include "mcgraph/enumerate.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/multigraph.hpp"
#include "mcgraph/named_graphs.hpp"
#include "test_support.hpp"

namespace mcg {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an mcg::Error";
  return ErrorCode::kParseError;
}

TEST(MultigraphTest, ConstructsK4AndDigon) {
  Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(k4.num_edges(), 6);
  EXPECT_TRUE(k4.is_simple());
  EXPECT_EQ(k4.edge(3), (Edge{1, 2}));

  Multigraph digon = Digon();
  EXPECT_EQ(digon.degree(0), 2);
  EXPECT_EQ(digon.multiplicity(0, 1), 2);
  EXPECT_FALSE(digon.is_simple());
}

TEST(MultigraphTest, RejectsLoopsAndBadEndpoints) {
  EXPECT_EQ(CodeOf([] { Multigraph(3, {{0, 0}}); }), ErrorCode::kLoopEdge);
  EXPECT_EQ(CodeOf([] { Multigraph(3, {{0, 3}}); }),
            ErrorCode::kVertexOutOfRange);
}

TEST(MultigraphTest, ContractK4Pair) {
  // Hand contraction: drop 01, merge 0 and 1 into x. Edges 02,12 become two
  // parallels x-2, edges 03,13 two parallels x-3, and 23 stays.
  ContractResult r = Contract(CompleteGraph(4), Bit(0) | Bit(1));
  const Multigraph& g = r.graph;
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 5);
  const VertexId x = r.contracted;
  EXPECT_EQ(g.multiplicity(x, r.vertex_map[2]), 2);
  EXPECT_EQ(g.multiplicity(x, r.vertex_map[3]), 2);
  EXPECT_EQ(g.multiplicity(r.vertex_map[2], r.vertex_map[3]), 1);
  EXPECT_EQ(r.edge_map[0], -1);  // edge 01 is internal
}

TEST(MultigraphTest, ContractEverythingAndCycle) {
  ContractResult all = Contract(Petersen(), FullSet(10));
  EXPECT_EQ(all.graph.num_vertices(), 1);
  EXPECT_EQ(all.graph.num_edges(), 0);

  ContractResult c4 = Contract(Cycle(4), Bit(0) | Bit(1));
  const Multigraph& g = c4.graph;
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.multiplicity(c4.contracted, c4.vertex_map[3]), 1);
  EXPECT_EQ(g.multiplicity(c4.contracted, c4.vertex_map[2]), 1);
  EXPECT_EQ(g.multiplicity(c4.vertex_map[2], c4.vertex_map[3]), 1);

  EXPECT_EQ(CodeOf([] { Contract(Cycle(4), 0); }), ErrorCode::kEmptyShore);
}

TEST(MultigraphTest, ContractedDegreeEqualsCutSize) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Multigraph g = testing::RandomGraph(8, 0.4, rng, 2);
    VertexSet x = std::uniform_int_distribution<VertexSet>(1, 255)(rng);
    ContractResult r = Contract(g, x);
    EXPECT_EQ(r.graph.degree(r.contracted), BoundarySize(g, x));
  }
}

TEST(MultigraphTest, DeleteAndSimplify) {
  const EdgeId first[] = {0};
  Multigraph k4_minus = DeleteEdges(CompleteGraph(4), first).graph;
  EXPECT_EQ(k4_minus.num_vertices(), 4);
  EXPECT_EQ(k4_minus.num_edges(), 5);
  Multigraph k2 = UnderlyingSimple(Digon());
  EXPECT_EQ(k2.num_edges(), 1);
  EXPECT_EQ(Canonical(k2), Canonical(CompleteGraph(2)));
}

TEST(MultigraphTest, VertexConnectivity) {
  EXPECT_EQ(VertexConnectivity(CompleteGraph(4)), 3);
  EXPECT_EQ(VertexConnectivity(Cycle(6)), 2);
  EXPECT_EQ(VertexConnectivity(CompleteGraph(2)), 1);
  EXPECT_EQ(VertexConnectivity(Petersen()), 3);
  EXPECT_EQ(VertexConnectivity(Multigraph(4, {{0, 1}, {2, 3}})), 0);
  // Parallel edges do not change vertex connectivity.
  EXPECT_EQ(VertexConnectivity(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}})), 1);
}

TEST(MultigraphTest, Bipartition) {
  EXPECT_TRUE(IsBipartite(Cycle(6)));
  EXPECT_FALSE(IsBipartite(Cycle(5)));
  EXPECT_FALSE(IsBipartite(CompleteGraph(4)));
  auto side = Bipartition(CompleteBipartite(3, 3));
  ASSERT_TRUE(side.has_value());
  EXPECT_EQ(*side, VertexSet{0b000111});
}

TEST(CanonicalTest, PrismRelabelingsAgree) {
  Multigraph prism = TriangularPrism();
  Multigraph other = Relabel(prism, {5, 3, 1, 0, 4, 2});
  EXPECT_EQ(Canonical(prism), Canonical(other));
}

TEST(CanonicalTest, WheelThreeIsK4AndDigonIsNotK2) {
  Multigraph w3(4, {{1, 2}, {2, 3}, {3, 1}, {0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(Canonical(w3), Canonical(CompleteGraph(4)));
  EXPECT_NE(Canonical(Digon()), Canonical(CompleteGraph(2)));
}

TEST(CanonicalTest, RoundTripThroughForm) {
  Multigraph g(5, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  CanonicalForm form = Canonical(g);
  EXPECT_EQ(Canonical(FromCanonical(form)), form);
  EXPECT_TRUE(IsIsomorphic(g, FromCanonical(form)));
}

TEST(CanonicalTest, InvariantUnderRandomPermutations) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Multigraph g = testing::RandomGraph(n, 0.45, rng, trial % 3 == 0 ? 3 : 1);
    Multigraph h = Relabel(g, testing::RandomPermutation(n, rng));
    EXPECT_EQ(Canonical(g), Canonical(h)) << EncodeMg(g);
  }
}

TEST(CanonicalTest, SymmetricGraphsFinish) {
  // Highly symmetric inputs exercise the automorphism pruning.
  EXPECT_EQ(Canonical(CompleteGraph(12)).bytes.size(), 1u + 66u);
  CanonicalLabeling pet = CanonicalLabel(Petersen());
  std::vector<VertexId> orbits = OrbitRepresentatives(10, pet.automorphisms);
  for (VertexId v : orbits) EXPECT_EQ(v, 0);  // vertex transitive
  EXPECT_EQ(Canonical(Relabel(Petersen(), {3, 1, 4, 0, 5, 9, 2, 6, 8, 7})),
            pet.form);
}

TEST(CanonicalTest, DistinguishesNonIsomorphicPairs) {
  EXPECT_FALSE(IsIsomorphic(TriangularPrism(), CompleteBipartite(3, 3)));
  EXPECT_FALSE(IsIsomorphic(Cycle(6), Multigraph(6, {{0, 1}, {1, 2}, {2, 0},
                                                     {3, 4}, {4, 5}, {5, 3}})));
}

TEST(Graph6Test, DecodesK4) {
  Multigraph k4 = DecodeGraph6("C~");
  EXPECT_EQ(k4.num_vertices(), 4);
  EXPECT_EQ(k4.num_edges(), 6);
  EXPECT_EQ(EncodeGraph6(k4), "C~");
  EXPECT_EQ(DecodeGraph6(">>graph6<<C~").num_edges(), 6);
}

TEST(Graph6Test, KnownEncodings) {
  // Petersen in its standard labeling has graph6 "IheA@GUAo".
  EXPECT_TRUE(IsIsomorphic(DecodeGraph6("IheA@GUAo"), Petersen()));
  EXPECT_EQ(EncodeGraph6(PathGraph(2)), "A_");
  EXPECT_EQ(EncodeGraph6(Multigraph(0, {})), "?");
}

TEST(Graph6Test, Errors) {
  EXPECT_EQ(CodeOf([] { EncodeGraph6(Digon()); }), ErrorCode::kNotSimple);
  EXPECT_EQ(CodeOf([] { DecodeGraph6("C"); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(CodeOf([] { DecodeGraph6("C~~"); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(CodeOf([] { DecodeGraph6("C\x01"); }),
            ErrorCode::kMalformedGraph6);
}

TEST(Graph6Test, RoundTripUpToTen) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng() % 11);
    Multigraph g = testing::RandomGraph(n, 0.5, rng);
    std::string text = EncodeGraph6(g);
    EXPECT_EQ(EncodeGraph6(DecodeGraph6(text)), text);
    EXPECT_TRUE(IsIsomorphic(DecodeGraph6(text), g));
  }
}

TEST(MgFormatTest, RoundTripAndErrors) {
  Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}});
  std::string text = EncodeMg(g);
  EXPECT_EQ(text, "3 3\n0 1\n0 1\n1 2\n");
  Multigraph back = DecodeMg(text);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(CodeOf([] { DecodeMg("3 2\n0 1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { DecodeMg("3 1\n1 1\n"); }), ErrorCode::kLoopEdge);
}

TEST(MgFormatTest, ReadsMixedCorpus) {
  std::vector<Multigraph> gs =
      ReadGraphs("# corpus\nC~\n2 2\n0 1\n0 1\n\nD~{\n3 1\n0 2\n");
  ASSERT_EQ(gs.size(), 4u);
  EXPECT_EQ(gs[0].num_edges(), 6);
  EXPECT_EQ(gs[1].num_edges(), 2);
  EXPECT_EQ(gs[2].num_edges(), 10);
  EXPECT_EQ(gs[3].num_vertices(), 3);
}

TEST(EnumerateTest, FourVerticesMinDegreeTwo) {
  std::vector<Multigraph> gs = EnumerateConnectedGraphs(4, 2);
  std::set<CanonicalForm> forms;
  for (const auto& g : gs) forms.insert(Canonical(g));
  std::set<CanonicalForm> expected = {
      Canonical(Cycle(4)), Canonical(CompleteGraph(4)),
      Canonical(DeleteEdge(CompleteGraph(4), 0))};
  EXPECT_EQ(forms, expected);
}

TEST(EnumerateTest, SmallCases) {
  ASSERT_EQ(EnumerateConnectedGraphs(2, 1).size(), 1u);
  EXPECT_EQ(EnumerateConnectedGraphs(2, 1)[0].num_edges(), 1);
  EXPECT_TRUE(EnumerateConnectedGraphs(2, 2).empty());
  EXPECT_EQ(CodeOf([] { EnumerateConnectedGraphs(11, 0); }),
            ErrorCode::kBoundExceeded);
}

TEST(EnumerateTest, KnownCountsOfConnectedGraphs) {
  // OEIS A001349.
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(EnumerateConnectedGraphs(n, 0).size(), expected[n - 1]) << n;
  }
}

TEST(EnumerateTest, MatchesLabeledBruteForceUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= 3; ++d) {
      std::vector<Multigraph> fast = EnumerateConnectedGraphs(n, d);
      std::vector<Multigraph> slow = EnumerateConnectedGraphsBruteForce(n, d);
      ASSERT_EQ(fast.size(), slow.size()) << n << " " << d;
      for (std::size_t i = 0; i < fast.size(); ++i) {
        EXPECT_EQ(Canonical(fast[i]), Canonical(slow[i]));
      }
    }
  }
}

TEST(EnumerateTest, OutputIsDuplicateFree) {
  std::set<CanonicalForm> forms;
  std::vector<Multigraph> gs = EnumerateConnectedGraphs(7, 2);
  for (const auto& g : gs) {
    EXPECT_TRUE(forms.insert(Canonical(g)).second);
    EXPECT_GE(g.min_degree(), 2);
    EXPECT_TRUE(IsConnected(g));
  }
}

TEST(EnumerateTest, KnownCountsOfConnectedBipartiteGraphs) {
  // OEIS A005142.
  const std::size_t expected[] = {1, 1, 1, 3, 5, 17, 44, 182, 730, 4032};
  for (int n = 1; n <= 10; ++n) {
    std::vector<Multigraph> gs = EnumerateConnectedBipartiteGraphs(n, 0);
    EXPECT_EQ(gs.size(), expected[n - 1]) << n;
    if (n <= 8) {
      std::size_t bipartite = 0;
      for (const Multigraph& g : EnumerateConnectedGraphs(n, 0)) {
        bipartite += IsBipartite(g);
      }
      EXPECT_EQ(bipartite, expected[n - 1]);
    }
  }
}

TEST(EnumerateTest, ParallelVariantsOfPath) {
  // P3 with multiplicities in {1,2}: (1,1), (1,2) ~ (2,1), (2,2).
  EXPECT_EQ(ParallelVariants(PathGraph(3), 2).size(), 3u);
}

TEST(EnumerateTest, HubParallelVariants) {
  // K4: one, two or three doubled edges at a vertex; a triangle of doubled
  // edges never meets a single vertex.
  EXPECT_EQ(HubParallelVariants(CompleteGraph(4), 2).size(), 3U);
  EXPECT_EQ(HubParallelVariants(CompleteGraph(4), 3).size(), 9U);
  for (const Multigraph& g : HubParallelVariants(Wheel(5), 2)) {
    VertexSet common = g.all_vertices();
    for (const Edge& e : g.edges()) {
      if (g.multiplicity(e.u, e.v) > 1) common &= Bit(e.u) | Bit(e.v);
    }
    EXPECT_NE(common, 0U) << EncodeMg(g);
    EXPECT_FALSE(g.is_simple());
  }
}

}  // namespace
}  // namespace mcg
