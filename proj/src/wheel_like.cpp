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


#include "mcgraph/wheel_like.hpp"

#include <algorithm>

#include "mcgraph/error.hpp"
#include "mcgraph/mc_core.hpp"

namespace mcg {
namespace {

void RequireBrick(const Multigraph& g) {
  if (!IsBrick(g)) throw Error(ErrorCode::kNotABrick, "graph is not a brick");
}

int Hits(const Multigraph& g, EdgeId e, VertexId h) {
  return g.edge(e).touches(h) ? 1 : 0;
}

}  // namespace

VertexSet WheelLikeHubs(const Multigraph& g) {
  RequireBrick(g);
  return WheelLikeHubsOfBrick(g);
}

VertexSet WheelLikeHubsOfBrick(const Multigraph& g) {
  // Every removable edge confines the hubs to its ends, so the scan stops
  // as soon as no candidate is left.
  VertexSet cand = g.all_vertices();
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    bool removable = g.multiplicity(ed.u, ed.v) > 1;
    if (!removable) {
      BitAdjacency adj = g.adjacency();
      adj.remove(ed.u, ed.v);
      removable = IsMatchingCoveredOn(adj, g.all_vertices());
    }
    if (removable) {
      cand &= Bit(ed.u) | Bit(ed.v);
      if (cand == 0) return 0;
    } else {
      rest.push_back(e);
    }
  }
  // A pair of non-removable edges whose deletion keeps g matching covered
  // is a doubleton; it rules out every candidate it meets zero or two times.
  for (std::size_t i = 0; i < rest.size() && cand != 0; ++i) {
    const Edge& a = g.edge(rest[i]);
    BitAdjacency without_a = g.adjacency();
    without_a.remove(a.u, a.v);
    for (std::size_t j = i + 1; j < rest.size() && cand != 0; ++j) {
      VertexSet doomed = 0;
      ForEach(cand, [&](VertexId h) {
        if (Hits(g, rest[i], h) + Hits(g, rest[j], h) != 1) doomed |= Bit(h);
      });
      if (doomed == 0) continue;
      const Edge& b = g.edge(rest[j]);
      BitAdjacency adj = without_a;
      adj.remove(b.u, b.v);
      if (IsMatchingCoveredOn(adj, g.all_vertices())) cand &= ~doomed;
    }
  }
  return cand;
}

VertexSet WheelLikeHubsReference(const Multigraph& g) {
  RequireBrick(g);
  std::vector<std::vector<EdgeId>> classes;
  for (EdgeId e : RemovableEdgesReference(g)) classes.push_back({e});
  for (auto [e, f] : RemovableDoubletonsReference(g)) classes.push_back({e, f});
  VertexSet hubs = 0;
  for (VertexId h = 0; h < g.num_vertices(); ++h) {
    bool ok = true;
    for (const auto& r : classes) {
      int hits = 0;
      for (EdgeId e : r) hits += Hits(g, e, h);
      ok = ok && hits == 1;
    }
    if (ok) hubs |= Bit(h);
  }
  return hubs;
}

bool IsWheelLike(const Multigraph& g) { return WheelLikeHubs(g) != 0; }

bool HubEdgesRemovable(const Multigraph& g, VertexId h) {
  g.check_vertex(h);
  const std::vector<EdgeId> removable = RemovableEdges(g);
  for (EdgeId e : g.incident_edges(h)) {
    if (!std::binary_search(removable.begin(), removable.end(), e)) {
      return false;
    }
  }
  return true;
}

bool IsK4Plus(const Multigraph& g) {
  if (g.num_vertices() != 4) return false;
  int multi_pairs = 0;
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) {
      int m = g.multiplicity(a, b);
      if (m == 0) return false;
      if (m > 1) ++multi_pairs;
    }
  }
  return multi_pairs <= 1;
}

VertexSet WheelHubCandidates(const WheelSpec& spec) {
  ValidateWheelSpec(spec);
  if (spec.k == 3) return FullSet(4);
  return Bit(kWheelHub);
}

namespace {

bool MultiplesAt(const Multigraph& w, VertexId hub) {
  for (const Edge& e : w.edges()) {
    if (w.multiplicity(e.u, e.v) > 1 && !e.touches(hub)) return false;
  }
  return true;
}

// Position of an edge {y, z} in the boundary of y.
int BoundaryPosition(const Multigraph& w, VertexId y, VertexId z) {
  auto b = w.incident_edges(y);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (w.edge(b[i]).other(y) == z) return static_cast<int>(i);
  }
  return -1;
}

struct Labeled {
  const Multigraph* g;
  VertexId hub;
};

OddWheelSpliceReport CheckLabeled(Labeled gl, VertexId u, Labeled hl,
                                  VertexId v, const std::vector<int>& theta) {
  OddWheelSpliceReport report;
  auto fail = [&](int condition, std::string why) {
    report.holds = false;
    report.violated = condition;
    report.reason = std::move(why);
    return report;
  };
  const bool u_hub = u == gl.hub;
  const bool v_hub = v == hl.hub;
  if (u_hub == v_hub) {
    return fail(1, u_hub ? "both splice vertices are hubs"
                         : "neither splice vertex is a hub");
  }
  const Multigraph& x = u_hub ? *gl.g : *hl.g;
  const Multigraph& y = u_hub ? *hl.g : *gl.g;
  const VertexId xv = u_hub ? u : v;
  const VertexId yv = u_hub ? v : u;
  const VertexId y_hub = u_hub ? hl.hub : gl.hub;
  if (x.num_vertices() < 6) {
    return fail(1, "the wheel spliced at its hub has fewer than 6 vertices");
  }
  if (!MultiplesAt(*gl.g, gl.hub) || !MultiplesAt(*hl.g, hl.hub)) {
    return fail(2, "a multiple edge misses the hub");
  }
  std::vector<int> inverse(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    inverse[theta[i]] = static_cast<int>(i);
  }
  // The rim neighbors of the rim splice vertex attach to rim vertices a and
  // b of the wheel spliced at its hub.
  std::vector<VertexId> ends;
  ForEach(y.neighbor_set(yv) & ~Bit(y_hub), [&](VertexId z) {
    int pos = BoundaryPosition(y, yv, z);
    int xpos = u_hub ? theta[pos] : inverse[pos];
    ends.push_back(x.edge(x.incident_edges(xv)[xpos]).other(xv));
  });
  if (ends[0] == ends[1]) {
    return fail(3, "both rim neighbors attach to the same vertex");
  }
  if (x.multiplicity(ends[0], ends[1]) > 0) {
    return fail(3, "rim neighbors attach to adjacent rim vertices");
  }
  return report;
}

}  // namespace

OddWheelSpliceReport CheckOddWheelSplice(const WheelSpec& gs, VertexId u,
                                         const WheelSpec& hs, VertexId v,
                                         const std::vector<int>& theta) {
  ValidateWheelSpec(gs);
  ValidateWheelSpec(hs);
  if (gs.k % 2 == 0 || hs.k % 2 == 0) {
    throw Error(ErrorCode::kNotOddWheels, "both wheels need an odd rim");
  }
  const Multigraph g = MakeWheel(gs);
  const Multigraph h = MakeWheel(hs);
  try {
    Splice(g, u, h, v, theta);
  } catch (const Error& e) {
    throw Error(ErrorCode::kSpliceInvalid, e.what());
  }
  // Every admissible hub labeling is tried; the report of the labeling
  // that gets furthest is kept.
  OddWheelSpliceReport best;
  best.holds = false;
  best.violated = 0;
  ForEach(WheelHubCandidates(gs), [&](VertexId gh) {
    ForEach(WheelHubCandidates(hs), [&](VertexId hh) {
      if (best.holds) return;
      OddWheelSpliceReport r = CheckLabeled({&g, gh}, u, {&h, hh}, v, theta);
      if (r.holds || r.violated > best.violated) best = r;
    });
  });
  return best;
}

bool IsPlanarSmall(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > 6) {
    throw Error(ErrorCode::kBoundExceeded,
                "small planarity test handles at most 6 vertices");
  }
  if (n < 5) return true;
  const BitAdjacency& adj = g.adjacency();
  const VertexSet all = g.all_vertices();
  auto complete_except = [&](VertexSet s, VertexId a, VertexId b) {
    bool ok = true;
    ForEach(s, [&](VertexId x) {
      VertexSet need = s & ~Bit(x);
      if (x == a) need &= ~Bit(b);
      if (x == b) need &= ~Bit(a);
      ok = ok && (adj.rows[x] & need) == need;
    });
    return ok;
  };
  for (VertexId w = 0; w < n; ++w) {
    VertexSet s = all & ~Bit(w);
    if (n == 5) {
      if (complete_except(all, -1, -1)) return false;
      break;
    }
    if (complete_except(s, -1, -1)) return false;
    // K5 with the edge ab subdivided by w.
    VertexSet nw = adj.rows[w];
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (Contains(nw, a) && Contains(nw, b) && complete_except(s, a, b)) {
          return false;
        }
      }
    }
  }
  if (n == 6) {
    for (VertexSet side = 0; side <= all; ++side) {
      if (Size(side) != 3 || !Contains(side, 0)) continue;
      VertexSet other = all & ~side;
      bool full = true;
      ForEach(side, [&](VertexId x) {
        full = full && (adj.rows[x] & other) == other;
      });
      if (full) return false;
    }
  }
  return true;
}

}  // namespace mcg
