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

#include "mcgraph/cuts.hpp"

#include <algorithm>

#include "mcgraph/decomposition.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/mc_core.hpp"

namespace mcg {
namespace {

void RequireMatchingCovered(const Multigraph& g) {
  if (!IsMatchingCovered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
}

void RequireProperShore(const Multigraph& g, VertexSet x) {
  if (x == 0 || (x & ~g.all_vertices()) != 0 || x == g.all_vertices()) {
    throw Error(ErrorCode::kEmptyShore,
                "shore must be a nonempty proper vertex subset");
  }
}

constexpr int kBarrierBound = 24;

}  // namespace

EdgeCut MakeCut(const Multigraph& g, VertexSet shore) {
  RequireProperShore(g, shore);
  return EdgeCut{shore, Boundary(g, shore)};
}

bool IsTrivialShore(const Multigraph& g, VertexSet shore) {
  return Size(shore) == 1 || Size(g.all_vertices() & ~shore) == 1;
}

PerfectMatchingTable::PerfectMatchingTable(const Multigraph& g, int bound) {
  if (g.num_vertices() > bound) {
    throw Error(ErrorCode::kBoundExceeded,
                "perfect matching enumeration limited to " +
                    std::to_string(bound) + " vertices");
  }
  half_ = g.num_vertices() / 2;
  ForEachPerfectMatchingOn(g.adjacency(), g.all_vertices(),
                           [&](const MateArray& mate) {
                             for (VertexId v = 0; v < g.num_vertices(); ++v) {
                               if (v < mate[v]) {
                                 pairs_.push_back(Bit(v) | Bit(mate[v]));
                               }
                             }
                             ++count_;
                             return true;
                           });
}

int PerfectMatchingTable::MaxCrossing(VertexSet x) const {
  int best = 0;
  for (int m = 0; m < count_; ++m) {
    int crossing = 0;
    for (int i = 0; i < half_; ++i) {
      crossing += Size(pairs_[m * half_ + i] & x) == 1;
    }
    best = std::max(best, crossing);
  }
  return best;
}

bool PerfectMatchingTable::IsTight(VertexSet x) const {
  for (int m = 0; m < count_; ++m) {
    int crossing = 0;
    for (int i = 0; i < half_; ++i) {
      crossing += Size(pairs_[m * half_ + i] & x) == 1;
    }
    if (crossing != 1) return false;
  }
  return true;
}

bool IsTight(const Multigraph& g, VertexSet x, int bound) {
  RequireProperShore(g, x);
  RequireMatchingCovered(g);
  if (Size(x) % 2 == 0) return false;
  return PerfectMatchingTable(g, bound).IsTight(x);
}

bool ContractionIsMatchingCovered(const BitAdjacency& adj, VertexSet all,
                                  VertexSet x) {
  const VertexSet rest = all & ~x;
  const VertexId rep = Lowest(x);
  BitAdjacency c;
  c.n = adj.n;
  VertexSet rep_row = 0;
  ForEach(rest, [&](VertexId v) {
    c.rows[v] = adj.rows[v] & rest;
    if ((adj.rows[v] & x) != 0) {
      c.rows[v] |= Bit(rep);
      rep_row |= Bit(v);
    }
  });
  c.rows[rep] = rep_row;
  return IsMatchingCoveredOn(c, rest | Bit(rep));
}

bool IsSeparating(const Multigraph& g, VertexSet x) {
  RequireProperShore(g, x);
  RequireMatchingCovered(g);
  const VertexSet all = g.all_vertices();
  if (Size(x) % 2 == 0) return false;
  const BitAdjacency& adj = g.adjacency();
  return ContractionIsMatchingCovered(adj, all, x) &&
         ContractionIsMatchingCovered(adj, all, all & ~x);
}

void ForEachNontrivialOddShore(int n,
                               const std::function<bool(VertexSet)>& visit) {
  if (n < 4) return;
  // Enumerate subsets of {1..n-1} and add vertex 0.
  const VertexSet limit = VertexSet{1} << (n - 1);
  for (VertexSet rest = 0; rest < limit; ++rest) {
    const int size = Size(rest) + 1;
    if (size % 2 == 0 || size == 1 || size >= n - 1) continue;
    if (!visit((rest << 1) | 1)) return;
  }
}

bool IsBarrier(const Multigraph& g, VertexSet b) {
  if (b == 0 || (b & ~g.all_vertices()) != 0) return false;
  return OddComponents(g, b) == Size(b);
}

void ForEachBarrier(const Multigraph& g,
                    const std::function<bool(const Barrier&)>& visit) {
  const int n = g.num_vertices();
  if (n > kBarrierBound) {
    throw Error(ErrorCode::kBoundExceeded, "barrier enumeration limited to " +
                                               std::to_string(kBarrierBound) +
                                               " vertices");
  }
  if (!HasPerfectMatching(g)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "barrier enumeration needs a perfect matching");
  }
  const BitAdjacency& adj = g.adjacency();
  const VertexSet all = g.all_vertices();
  for (VertexSet b = 1; b <= all; ++b) {
    if (OddComponentsWithin(adj, all & ~b) != Size(b)) continue;
    Barrier barrier{b, {}};
    for (VertexSet c : ComponentsWithin(adj, all & ~b)) {
      if (Size(c) % 2 == 1) barrier.odd_components.push_back(c);
    }
    if (!visit(barrier)) return;
  }
}

std::vector<Barrier> Barriers(const Multigraph& g) {
  std::vector<Barrier> out;
  ForEachBarrier(g, [&](const Barrier& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

std::vector<Barrier> MaximalBarriers(const Multigraph& g) {
  std::vector<Barrier> all = Barriers(g);
  std::vector<Barrier> out;
  for (const Barrier& b : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const Barrier& c) {
      return c.set != b.set && (c.set & b.set) == b.set;
    });
    if (!dominated) out.push_back(b);
  }
  return out;
}

EdgeCut BarrierCut(const Multigraph& g, VertexSet b, VertexSet q) {
  if (!IsBarrier(g, b)) throw Error(ErrorCode::kNotABarrier, "not a barrier");
  const std::vector<VertexSet> comps =
      ComponentsWithin(g.adjacency(), g.all_vertices() & ~b);
  if (Size(q) % 2 == 0 || std::find(comps.begin(), comps.end(), q) == comps.end()) {
    throw Error(ErrorCode::kNotAComponent,
                "not an odd component of the barrier complement");
  }
  return MakeCut(g, q);
}

bool IsSpecialBarrierCut(const Multigraph& g, VertexSet b, VertexSet x) {
  if (!IsBarrier(g, b)) throw Error(ErrorCode::kNotABarrier, "not a barrier");
  const VertexSet all = g.all_vertices();
  const VertexSet xc = all & ~x;
  bool found = false;
  int nontrivial = 0;
  for (VertexSet c : ComponentsWithin(g.adjacency(), all & ~b)) {
    if (Size(c) % 2 == 0) continue;
    if (Size(c) > 1) ++nontrivial;
    if (Size(c) > 1 && (c == x || c == xc)) found = true;
  }
  return found && nontrivial == 1;
}

std::optional<VertexSet> SpecialBarrierFor(const Multigraph& g, VertexSet x) {
  std::optional<VertexSet> out;
  ForEachBarrier(g, [&](const Barrier& b) {
    if (IsSpecialBarrierCut(g, b.set, x)) out = b.set;
    return !out.has_value();
  });
  return out;
}

bool IsTwoSeparation(const Multigraph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return false;
  const std::vector<VertexSet> comps = ComponentsWithin(
      g.adjacency(), g.all_vertices() & ~(Bit(u) | Bit(v)));
  if (comps.size() < 2) return false;
  return std::all_of(comps.begin(), comps.end(),
                     [](VertexSet c) { return Size(c) % 2 == 0; });
}

std::vector<std::pair<VertexId, VertexId>> TwoSeparations(const Multigraph& g) {
  RequireMatchingCovered(g);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
      if (IsTwoSeparation(g, u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<EdgeCut> TwoSeparationCuts(const Multigraph& g, VertexId u,
                                       VertexId v) {
  if (!IsTwoSeparation(g, u, v)) {
    throw Error(ErrorCode::kNotA2Separation, "not a 2-separation");
  }
  const std::vector<VertexSet> comps = ComponentsWithin(
      g.adjacency(), g.all_vertices() & ~(Bit(u) | Bit(v)));
  const int k = static_cast<int>(comps.size());
  std::vector<EdgeCut> out;
  // Bit i of `pick` puts component i+1 into G1 alongside component 0.
  for (std::uint32_t pick = 0; pick + 1 < (1U << (k - 1)); ++pick) {
    VertexSet g1 = comps[0];
    for (int i = 1; i < k; ++i) {
      if ((pick >> (i - 1)) & 1U) g1 |= comps[i];
    }
    out.push_back(MakeCut(g, g1 | Bit(u)));
    out.push_back(MakeCut(g, g1 | Bit(v)));
  }
  return out;
}

bool IsRobust(const Multigraph& g, VertexSet x) {
  if (!IsSeparating(g, x) || IsTight(g, x)) return false;
  return IsNearBrick(Contract(g, x).graph) &&
         IsNearBrick(Contract(g, g.all_vertices() & ~x).graph);
}

const char* CutKindName(CutKind kind) {
  switch (kind) {
    case CutKind::kTrivial: return "trivial";
    case CutKind::kTight: return "tight";
    case CutKind::kRobust: return "robust";
    case CutKind::kSeparating: return "separating";
    case CutKind::kNonSeparating: return "non-separating";
  }
  return "unknown";
}

CutKind ClassifyCut(const Multigraph& g, VertexSet x) {
  RequireProperShore(g, x);
  RequireMatchingCovered(g);
  if (IsTrivialShore(g, x)) return CutKind::kTrivial;
  if (!IsSeparating(g, x)) return CutKind::kNonSeparating;
  if (IsTight(g, x)) return CutKind::kTight;
  return IsRobust(g, x) ? CutKind::kRobust : CutKind::kSeparating;
}

}  // namespace mcg
