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

#ifndef MCGRAPH_VERTEX_SET_HPP_
#define MCGRAPH_VERTEX_SET_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace mcg {

using VertexId = int;
using EdgeId = int;

// Vertex subsets are bitmasks; every graph in this library has at most
// kMaxVertices vertices.
using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

constexpr VertexSet Bit(VertexId v) { return VertexSet{1} << v; }
constexpr VertexSet FullSet(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
constexpr bool Contains(VertexSet s, VertexId v) { return (s >> v) & 1U; }
constexpr int Size(VertexSet s) { return std::popcount(s); }
constexpr VertexId Lowest(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void ForEach(VertexSet s, F&& f) {
  while (s != 0) {
    f(Lowest(s));
    s &= s - 1;
  }
}

inline std::vector<VertexId> ToVector(VertexSet s) {
  std::vector<VertexId> out;
  out.reserve(Size(s));
  ForEach(s, [&](VertexId v) { out.push_back(v); });
  return out;
}

inline VertexSet FromVector(const std::vector<VertexId>& vs) {
  VertexSet s = 0;
  for (VertexId v : vs) s |= Bit(v);
  return s;
}

// Lexicographic order on the sorted member lists of two sets.
inline bool LexLess(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    VertexId x = Lowest(a);
    VertexId y = Lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Adjacency rows of the underlying simple graph.
struct BitAdjacency {
  int n = 0;
  std::array<VertexSet, kMaxVertices> rows{};

  VertexSet all() const { return FullSet(n); }
  void add(VertexId a, VertexId b) {
    rows[a] |= Bit(b);
    rows[b] |= Bit(a);
  }
  void remove(VertexId a, VertexId b) {
    rows[a] &= ~Bit(b);
    rows[b] &= ~Bit(a);
  }
};

// Vertices reachable from `start` inside `active`.
inline VertexSet ReachableWithin(const BitAdjacency& adj, VertexSet active,
                                 VertexId start) {
  VertexSet seen = Bit(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    ForEach(frontier, [&](VertexId v) { next |= adj.rows[v]; });
    next &= active & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool IsConnectedWithin(const BitAdjacency& adj, VertexSet active) {
  if (active == 0) return true;
  return ReachableWithin(adj, active, Lowest(active)) == active;
}

// Connected components of the subgraph induced by `active`, ordered by their
// lowest vertex.
inline std::vector<VertexSet> ComponentsWithin(const BitAdjacency& adj,
                                               VertexSet active) {
  std::vector<VertexSet> out;
  while (active != 0) {
    VertexSet c = ReachableWithin(adj, active, Lowest(active));
    out.push_back(c);
    active &= ~c;
  }
  return out;
}

inline int OddComponentsWithin(const BitAdjacency& adj, VertexSet active) {
  int odd = 0;
  while (active != 0) {
    VertexSet c = ReachableWithin(adj, active, Lowest(active));
    odd += Size(c) & 1;
    active &= ~c;
  }
  return odd;
}

}  // namespace mcg

#endif  // MCGRAPH_VERTEX_SET_HPP_
