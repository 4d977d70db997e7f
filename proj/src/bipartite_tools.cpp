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

#include "mcgraph/bipartite_tools.hpp"

#include <algorithm>

#include "mcgraph/cuts.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/mc_core.hpp"

namespace mcg {
namespace {

// Edges from `from` to `to`, counted with multiplicity.
int CountEdges(const Multigraph& g, VertexSet from, VertexSet to) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    count += (Contains(from, e.u) && Contains(to, e.v)) ||
             (Contains(from, e.v) && Contains(to, e.u));
  }
  return count;
}

}  // namespace

ColorClasses RequireBipartiteMC(const Multigraph& g) {
  std::optional<VertexSet> side = Bipartition(g);
  if (!side || !IsMatchingCovered(g)) {
    throw Error(ErrorCode::kNotBipartiteMC,
                "graph is not bipartite and matching covered");
  }
  return {*side, g.all_vertices() & ~*side};
}

std::optional<PSet> AsPSet(const Multigraph& g, const ColorClasses& cls,
                           VertexSet x) {
  const VertexSet xc = g.all_vertices() & ~x;
  if (Size(x & cls.a) != Size(x & cls.b)) return std::nullopt;
  PSet p{x, CountEdges(g, x & cls.a, xc & cls.b) == 1,
         CountEdges(g, xc & cls.a, x & cls.b) == 1};
  if (!p.a_side && !p.b_side) return std::nullopt;
  return p;
}

bool IsPSet(const Multigraph& g, VertexSet x) {
  return AsPSet(g, RequireBipartiteMC(g), x).has_value();
}

std::vector<PSet> AllPSets(const Multigraph& g) {
  const ColorClasses cls = RequireBipartiteMC(g);
  const int n = g.num_vertices();
  if (n < 4) {
    throw Error(ErrorCode::kPreconditionViolated,
                "P-sets need at least 4 vertices");
  }
  if (n > kPSetBound) {
    throw Error(ErrorCode::kBoundExceeded,
                "P-set search limited to " + std::to_string(kPSetBound) +
                    " vertices");
  }
  std::vector<PSet> out;
  for (VertexSet x = 1; x < g.all_vertices(); ++x) {
    if (auto p = AsPSet(g, cls, x)) out.push_back(*p);
  }
  return out;
}

std::optional<PSet> MinimumPSet(const Multigraph& g) {
  std::optional<PSet> best;
  for (const PSet& p : AllPSets(g)) {
    if (!best || Size(p.x) < Size(best->x) ||
        (Size(p.x) == Size(best->x) && LexLess(p.x, best->x))) {
      best = p;
    }
  }
  return best;
}

bool CheckNonRemovabilityCertificate(const Multigraph& g, EdgeId e,
                                     const NonRemovabilityCertificate& cert) {
  const ColorClasses cls = RequireBipartiteMC(g);
  const Edge& ed = g.edge(e);
  const VertexSet a = Contains(cls.a, ed.u) ? cls.a : cls.b;
  const VertexSet b = g.all_vertices() & ~a;
  const VertexId u = ed.u;
  const VertexId v = ed.v;
  if (cert.a1 == 0 || cert.b1 == 0 || (cert.a1 & ~a) != 0 ||
      (cert.b1 & ~b) != 0 || cert.a1 == a || cert.b1 == b) {
    return false;
  }
  if (!Contains(cert.a1, u) || Contains(cert.b1, v)) return false;
  const VertexSet rest_b = b & ~cert.b1;
  if (CountEdges(g, cert.a1, rest_b) != 1) return false;
  return IsMatchingCoveredOn(g.adjacency(), cert.a1 | cert.b1);
}

std::optional<NonRemovabilityCertificate> FindNonRemovabilityCertificate(
    const Multigraph& g, EdgeId e) {
  const ColorClasses cls = RequireBipartiteMC(g);
  g.check_edge(e);
  if (g.num_edges() < 2) {
    throw Error(ErrorCode::kPreconditionViolated, "needs at least two edges");
  }
  if (g.num_vertices() > kPSetBound) {
    throw Error(ErrorCode::kBoundExceeded, "certificate search limited to " +
                                               std::to_string(kPSetBound) +
                                               " vertices");
  }
  const Edge& ed = g.edge(e);
  const VertexSet a = Contains(cls.a, ed.u) ? cls.a : cls.b;
  const VertexId u = ed.u;
  const VertexId v = ed.v;
  const BitAdjacency& adj = g.adjacency();
  // B1 is forced: every B-vertex of G[A1 ∪ B1] needs a neighbour in A1, and
  // all A1-neighbours except v must lie in B1.
  const VertexSet others = a & ~Bit(u);
  std::optional<NonRemovabilityCertificate> found;
  const std::vector<VertexId> pool = ToVector(others);
  const std::uint64_t limit = std::uint64_t{1} << pool.size();
  for (std::uint64_t pick = 0; pick < limit && !found; ++pick) {
    VertexSet a1 = Bit(u);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((pick >> i) & 1U) a1 |= Bit(pool[i]);
    }
    if (a1 == a) continue;
    VertexSet nbrs = 0;
    ForEach(a1, [&](VertexId w) { nbrs |= adj.rows[w]; });
    const VertexSet b1 = nbrs & ~Bit(v);
    NonRemovabilityCertificate cert{a1, b1};
    if (b1 != 0 && Size(b1) == Size(a1) &&
        CheckNonRemovabilityCertificate(g, e, cert)) {
      found = cert;
    }
  }
  return found;
}

BipartiteRemovability IsRemovableBipartite(const Multigraph& g, EdgeId e) {
  RequireBipartiteMC(g);
  BipartiteRemovability out;
  out.removable = IsRemovableEdge(g, e);
  if (!out.removable) out.certificate = FindNonRemovabilityCertificate(g, e);
  return out;
}

bool IsTightBipartite(const Multigraph& g, VertexSet x) {
  const ColorClasses cls = RequireBipartiteMC(g);
  if (x == 0 || x == g.all_vertices() || (x & ~g.all_vertices()) != 0) {
    throw Error(ErrorCode::kEmptyShore,
                "shore must be a nonempty proper vertex subset");
  }
  const int in_a = Size(x & cls.a);
  const int in_b = Size(x & cls.b);
  if (std::abs(in_a - in_b) != 1) return false;
  const VertexSet larger = in_a > in_b ? x & cls.a : x & cls.b;
  for (EdgeId e : Boundary(g, x)) {
    const Edge& ed = g.edge(e);
    if (!Contains(larger, ed.u) && !Contains(larger, ed.v)) return false;
  }
  return true;
}

BarrierContraction ContractBarrier(const Multigraph& g, VertexSet b) {
  if (!IsMatchingCovered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  if (IsBipartite(g)) {
    throw Error(ErrorCode::kPreconditionViolated, "graph must be nonbipartite");
  }
  if (!IsBarrier(g, b)) throw Error(ErrorCode::kNotABarrier, "not a barrier");
  if (Size(b) < 2) {
    throw Error(ErrorCode::kBarrierTrivial, "barrier must be nontrivial");
  }
  const VertexSet rest = g.all_vertices() & ~b;
  for (VertexSet extra = rest; extra != 0; extra = (extra - 1) & rest) {
    if (IsBarrier(g, b | extra)) {
      throw Error(ErrorCode::kPreconditionViolated, "barrier is not maximal");
    }
  }
  BarrierContraction out;
  std::vector<int> where(g.num_vertices(), -1);
  ForEach(b, [&](VertexId v) {
    where[v] = static_cast<int>(out.members.size());
    out.members.push_back(Bit(v));
  });
  out.b_side = FullSet(Size(b));
  for (VertexSet comp : ComponentsWithin(g.adjacency(), rest)) {
    ForEach(comp, [&](VertexId v) { where[v] = static_cast<int>(out.members.size()); });
    out.members.push_back(comp);
  }
  out.i_side = FullSet(static_cast<int>(out.members.size())) & ~out.b_side;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (where[ed.u] == where[ed.v]) continue;
    edges.push_back({where[ed.u], where[ed.v]});
    out.edge_origin.push_back(e);
  }
  out.h = Multigraph(static_cast<int>(out.members.size()), std::move(edges));
  return out;
}

VertexSet WSet(const BarrierContraction& bc) {
  VertexSet w = 0;
  for (EdgeId e : RemovableEdges(bc.h)) {
    const Edge& ed = bc.h.edge(e);
    w |= (Bit(ed.u) | Bit(ed.v)) & bc.i_side;
  }
  return w;
}

}  // namespace mcg
