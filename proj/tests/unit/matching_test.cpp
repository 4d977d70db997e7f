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
#include <set>

#include "mcgraph/error.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/matching.hpp"
#include "mcgraph/multigraph.hpp"
#include "mcgraph/named_graphs.hpp"
#include "test_support.hpp"

namespace mcg {
namespace {

bool IsMatchingOf(const Multigraph& g, const Matching& m) {
  VertexSet seen = 0;
  for (EdgeId e : m.edges) {
    const Edge& ed = g.edge(e);
    if (Contains(seen, ed.u) || Contains(seen, ed.v)) return false;
    seen |= Bit(ed.u) | Bit(ed.v);
  }
  return seen == m.covered;
}

TEST(MaxMatchingTest, Examples) {
  EXPECT_EQ(MaxMatching(Cycle(6)).size(), 3);
  EXPECT_EQ(MaxMatching(Cycle(5)).size(), 2);
  EXPECT_EQ(MaxMatching(Petersen()).size(), 5);
  EXPECT_EQ(MaxMatching(Star(3)).size(), 1);
  EXPECT_EQ(MaxMatching(Multigraph(0, {})).size(), 0);
}

TEST(MaxMatchingTest, LiftsToLowestParallel) {
  Multigraph g(2, {{0, 1}, {1, 0}, {0, 1}});
  Matching m = MaxMatching(g);
  ASSERT_EQ(m.size(), 1);
  EXPECT_EQ(m.edges[0], 0);
}

TEST(MaxMatchingTest, AgreesWithBacktracking) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Multigraph g = testing::RandomGraph(n, 0.1 + 0.1 * (trial % 6), rng, 2);
    Matching m = MaxMatching(g);
    EXPECT_TRUE(IsMatchingOf(g, m));
    EXPECT_EQ(m.size(), testing::BruteForceMatchingSize(g, g.all_vertices()))
        << EncodeMg(g);
  }
}

TEST(PerfectMatchingTest, Existence) {
  EXPECT_TRUE(HasPerfectMatching(CompleteGraph(4)));
  EXPECT_FALSE(HasPerfectMatching(CompleteGraph(3)));
  EXPECT_FALSE(HasPerfectMatching(Star(3)));
  EXPECT_TRUE(HasPerfectMatching(Multigraph(0, {})));
}

TEST(PerfectMatchingTest, OddComponents) {
  EXPECT_EQ(OddComponentsCount(Star(3), Bit(0)), 3);
  EXPECT_EQ(OddComponentsCount(CompleteGraph(4), 0), 0);
  EXPECT_EQ(OddComponentsCount(TriangularPrism(), Bit(2)), 1);
}

TEST(PerfectMatchingTest, TutteViolatorExamples) {
  auto star = FindTutteViolator(Star(3));
  ASSERT_TRUE(star.has_value());
  EXPECT_EQ(star->s, Bit(0));
  EXPECT_EQ(star->odd_count, 3);
  EXPECT_FALSE(FindTutteViolator(Cycle(6)).has_value());
  auto odd = FindTutteViolator(Cycle(5));
  ASSERT_TRUE(odd.has_value());
  EXPECT_GT(odd->odd_count, Size(odd->s));
}

TEST(PerfectMatchingTest, TutteViolatorAgreesWithSubsetSearch) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Multigraph g = testing::RandomGraph(n, 0.15 + 0.1 * (trial % 5), rng);
    auto v = FindTutteViolator(g);
    EXPECT_EQ(v.has_value(), !HasPerfectMatching(g));
    EXPECT_EQ(v.has_value(), testing::BruteForceHasTutteViolator(g));
    if (v) {
      EXPECT_EQ(v->odd_count, OddComponentsCount(g, v->s));
      EXPECT_GT(v->odd_count, Size(v->s));
    }
  }
}

TEST(EnumeratePmTest, Counts) {
  EXPECT_EQ(EnumeratePerfectMatchings(CompleteGraph(4)).size(), 3u);
  EXPECT_EQ(EnumeratePerfectMatchings(TriangularPrism()).size(), 4u);
  EXPECT_EQ(EnumeratePerfectMatchings(Digon()).size(), 2u);
  EXPECT_EQ(EnumeratePerfectMatchings(Petersen()).size(), 6u);
  EXPECT_EQ(EnumeratePerfectMatchings(CompleteGraph(6)).size(), 15u);
  EXPECT_EQ(EnumeratePerfectMatchings(Cycle(5)).size(), 0u);
}

TEST(EnumeratePmTest, BoundIsEnforced) {
  try {
    EnumeratePerfectMatchings(Cycle(26));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
  EXPECT_EQ(EnumeratePerfectMatchings(Cycle(26), 26).size(), 2u);
}

TEST(EnumeratePmTest, AgreesWithSubsetCount) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    Multigraph g = testing::RandomGraph(n, 0.5, rng, 2);
    std::vector<Matching> all = EnumeratePerfectMatchings(g);
    EXPECT_EQ(static_cast<long>(all.size()),
              testing::BruteForcePerfectMatchingCount(g));
    std::set<std::vector<EdgeId>> distinct;
    for (const auto& m : all) {
      EXPECT_TRUE(m.is_perfect(g));
      EXPECT_TRUE(IsMatchingOf(g, m));
      distinct.insert(m.edges);
    }
    EXPECT_EQ(distinct.size(), all.size());
    // Containment agrees with enumeration.
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      bool seen = false;
      for (const auto& m : all) {
        seen = seen || std::binary_search(m.edges.begin(), m.edges.end(), e);
      }
      EXPECT_EQ(HasPmContaining(g, e), seen);
    }
  }
}

TEST(EnumeratePmTest, SimpleWalkerAgrees) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    Multigraph g = testing::RandomGraph(n, 0.5, rng);
    long count = 0;
    ForEachPerfectMatchingOn(g.adjacency(), g.all_vertices(),
                             [&](const MateArray&) {
                               ++count;
                               return true;
                             });
    EXPECT_EQ(count, testing::BruteForcePerfectMatchingCount(g));
  }
}

TEST(PmQueryTest, Examples) {
  for (EdgeId e = 0; e < 6; ++e) {
    EXPECT_TRUE(HasPmContaining(CompleteGraph(4), e));
    EXPECT_TRUE(HasPmContaining(Cycle(6), e));
  }
  Multigraph p4 = PathGraph(4);  // edges 01, 12, 23
  EXPECT_TRUE(HasPmContaining(p4, 0));
  EXPECT_FALSE(HasPmContaining(p4, 1));
  EXPECT_TRUE(HasPmAvoidingVertices(TriangularPrism(), 0, 1));
  EXPECT_FALSE(HasPmAvoidingVertices(Cycle(6), 0, 2));
  EXPECT_TRUE(HasPmAvoidingVertices(Cycle(6), 0, 3));
  EXPECT_TRUE(HasPmAvoidingVertices(Cycle(6), 0, 1));
}

}  // namespace
}  // namespace mcg
