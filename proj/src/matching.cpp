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

#include "mcgraph/matching.hpp"

#include <algorithm>
#include <string>

#include "mcgraph/error.hpp"

namespace mcg {
namespace {

// Augmenting-path search with blossom contraction, one root at a time.
class Blossom {
 public:
  Blossom(const BitAdjacency& adj, VertexSet active, MateArray& mate)
      : adj_(adj), active_(active), mate_(mate) {}

  // Searches for an augmenting path from the exposed vertex `root` and
  // applies it. Returns true on success.
  bool Augment(VertexId root) {
    int tail = FindPath(root);
    if (tail < 0) return false;
    while (tail >= 0) {
      int pv = parent_[tail];
      int ppv = mate_[pv];
      mate_[tail] = static_cast<std::int8_t>(pv);
      mate_[pv] = static_cast<std::int8_t>(tail);
      tail = ppv;
    }
    return true;
  }

 private:
  int Lca(int a, int b) {
    VertexSet seen = 0;
    while (true) {
      a = base_[a];
      seen |= Bit(a);
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (Contains(seen, b)) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_ |= Bit(base_[v]) | Bit(base_[mate_[v]]);
      parent_[v] = static_cast<std::int8_t>(child);
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int FindPath(int root) {
    used_ = Bit(root);
    ForEach(active_, [&](VertexId v) {
      parent_[v] = -1;
      base_[v] = static_cast<std::int8_t>(v);
    });
    int queue[kMaxVertices];
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int v = queue[head++];
      VertexSet nbrs = adj_.rows[v] & active_;
      while (nbrs != 0) {
        int to = Lowest(nbrs);
        nbrs &= nbrs - 1;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          int cur = Lca(v, to);
          blossom_ = 0;
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          ForEach(active_, [&](VertexId i) {
            if (Contains(blossom_, base_[i])) {
              base_[i] = static_cast<std::int8_t>(cur);
              if (!Contains(used_, i)) {
                used_ |= Bit(i);
                queue[tail++] = i;
              }
            }
          });
        } else if (parent_[to] < 0) {
          parent_[to] = static_cast<std::int8_t>(v);
          if (mate_[to] < 0) return to;
          used_ |= Bit(mate_[to]);
          queue[tail++] = mate_[to];
        }
      }
    }
    return -1;
  }

  const BitAdjacency& adj_;
  VertexSet active_;
  MateArray& mate_;
  std::int8_t parent_[kMaxVertices];
  std::int8_t base_[kMaxVertices];
  VertexSet used_ = 0;
  VertexSet blossom_ = 0;
};

}  // namespace

int MaximumMatchingOn(const BitAdjacency& adj, VertexSet active,
                      MateArray& mate) {
  mate.fill(-1);
  int size = 0;
  // Greedy start.
  ForEach(active, [&](VertexId v) {
    if (mate[v] >= 0) return;
    VertexSet free = adj.rows[v] & active;
    while (free != 0) {
      VertexId w = Lowest(free);
      free &= free - 1;
      if (mate[w] < 0) {
        mate[v] = static_cast<std::int8_t>(w);
        mate[w] = static_cast<std::int8_t>(v);
        ++size;
        return;
      }
    }
  });
  Blossom search(adj, active, mate);
  ForEach(active, [&](VertexId v) {
    if (mate[v] < 0 && search.Augment(v)) ++size;
  });
  return size;
}

int MaximumMatchingSize(const BitAdjacency& adj, VertexSet active) {
  MateArray mate;
  return MaximumMatchingOn(adj, active, mate);
}

bool HasPerfectMatchingOn(const BitAdjacency& adj, VertexSet active) {
  if (Size(active) % 2 != 0) return false;
  MateArray mate;
  return 2 * MaximumMatchingOn(adj, active, mate) == Size(active);
}

bool AllowedNeighbors(const BitAdjacency& adj, VertexSet active,
                      std::array<VertexSet, kMaxVertices>& allowed) {
  if (Size(active) % 2 != 0) return false;
  MateArray mate;
  if (2 * MaximumMatchingOn(adj, active, mate) != Size(active)) return false;
  ForEach(active, [&](VertexId v) { allowed[v] = Bit(mate[v]); });
  ForEach(active, [&](VertexId v) {
    VertexSet pending = adj.rows[v] & active & ~FullSet(v + 1) & ~allowed[v];
    ForEach(pending, [&](VertexId w) {
      // G - v - w has a perfect matching iff the two orphaned partners can be
      // joined by an augmenting path.
      MateArray trial = mate;
      const int a = trial[v];
      const int b = trial[w];
      trial[a] = -1;
      trial[b] = -1;
      trial[v] = -1;
      trial[w] = -1;
      Blossom search(adj, active & ~Bit(v) & ~Bit(w), trial);
      if (search.Augment(a)) {
        allowed[v] |= Bit(w);
        allowed[w] |= Bit(v);
      }
    });
  });
  return true;
}

Matching MaxMatching(const Multigraph& g) {
  MateArray mate;
  MaximumMatchingOn(g.adjacency(), g.all_vertices(), mate);
  Matching out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] < 0) continue;
    out.covered |= Bit(v);
    if (mate[v] < v) continue;
    EdgeId pick = -1;
    for (EdgeId e : g.incident_edges(v)) {
      if (g.edge(e).other(v) == mate[v] && (pick < 0 || e < pick)) pick = e;
    }
    out.edges.push_back(pick);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool HasPerfectMatching(const Multigraph& g) {
  return HasPerfectMatchingOn(g.adjacency(), g.all_vertices());
}

int OddComponentsCount(const Multigraph& g, VertexSet s) {
  return OddComponents(g, s);
}

std::optional<TutteViolator> FindTutteViolator(const Multigraph& g) {
  const BitAdjacency& adj = g.adjacency();
  const VertexSet all = g.all_vertices();
  const int nu = MaximumMatchingSize(adj, all);
  if (2 * nu == g.num_vertices()) return std::nullopt;
  VertexSet missed = 0;
  ForEach(all, [&](VertexId v) {
    if (MaximumMatchingSize(adj, all & ~Bit(v)) == nu) missed |= Bit(v);
  });
  VertexSet s = 0;
  ForEach(missed, [&](VertexId v) { s |= adj.rows[v]; });
  s &= ~missed;
  return TutteViolator{s, OddComponents(g, s)};
}

namespace {

class PmWalker {
 public:
  PmWalker(const Multigraph& g,
           const std::function<bool(const Matching&)>& visit)
      : g_(g), visit_(visit) {}

  bool Run(VertexSet unmatched) {
    if (unmatched == 0) {
      Matching m;
      m.edges = chosen_;
      std::sort(m.edges.begin(), m.edges.end());
      m.covered = g_.all_vertices();
      return visit_(m);
    }
    const VertexId v = Lowest(unmatched);
    for (EdgeId e : g_.incident_edges(v)) {
      const VertexId w = g_.edge(e).other(v);
      if (!Contains(unmatched, w)) continue;
      const VertexSet rest = unmatched & ~Bit(v) & ~Bit(w);
      if (!Feasible(rest)) continue;
      chosen_.push_back(e);
      bool go_on = Run(rest);
      chosen_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

 private:
  bool Feasible(VertexSet rest) const {
    bool ok = true;
    ForEach(rest, [&](VertexId x) {
      ok = ok && (g_.neighbor_set(x) & rest) != 0;
    });
    return ok;
  }

  const Multigraph& g_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<EdgeId> chosen_;
};

bool WalkSimple(const BitAdjacency& adj, VertexSet unmatched, MateArray& mate,
                const std::function<bool(const MateArray&)>& visit) {
  if (unmatched == 0) return visit(mate);
  const VertexId v = Lowest(unmatched);
  VertexSet options = adj.rows[v] & unmatched;
  while (options != 0) {
    const VertexId w = Lowest(options);
    options &= options - 1;
    const VertexSet rest = unmatched & ~Bit(v) & ~Bit(w);
    bool dead = false;
    ForEach(rest, [&](VertexId x) { dead = dead || (adj.rows[x] & rest) == 0; });
    if (dead) continue;
    mate[v] = static_cast<std::int8_t>(w);
    mate[w] = static_cast<std::int8_t>(v);
    if (!WalkSimple(adj, rest, mate, visit)) return false;
  }
  mate[v] = -1;
  return true;
}

}  // namespace

void ForEachPerfectMatching(const Multigraph& g,
                            const std::function<bool(const Matching&)>& visit,
                            int bound) {
  if (g.num_vertices() > bound) {
    throw Error(ErrorCode::kBoundExceeded,
                "perfect matching enumeration above n = " +
                    std::to_string(bound));
  }
  if (g.num_vertices() % 2 != 0) return;
  PmWalker walker(g, visit);
  walker.Run(g.all_vertices());
}

std::vector<Matching> EnumeratePerfectMatchings(const Multigraph& g,
                                                int bound) {
  std::vector<Matching> out;
  ForEachPerfectMatching(
      g,
      [&](const Matching& m) {
        out.push_back(m);
        return true;
      },
      bound);
  return out;
}

void ForEachPerfectMatchingOn(
    const BitAdjacency& adj, VertexSet active,
    const std::function<bool(const MateArray&)>& visit) {
  if (Size(active) % 2 != 0) return;
  MateArray mate;
  mate.fill(-1);
  WalkSimple(adj, active, mate, visit);
}

bool HasPmContaining(const Multigraph& g, EdgeId e) {
  g.check_edge(e);
  const Edge& ed = g.edge(e);
  return HasPerfectMatchingOn(g.adjacency(),
                              g.all_vertices() & ~Bit(ed.u) & ~Bit(ed.v));
}

bool HasPmAvoidingVertices(const Multigraph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::kPreconditionViolated, "vertices must be distinct");
  }
  return HasPerfectMatchingOn(g.adjacency(),
                              g.all_vertices() & ~Bit(u) & ~Bit(v));
}

}  // namespace mcg
