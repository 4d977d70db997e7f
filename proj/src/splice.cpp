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


#include "mcgraph/splice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "mcgraph/canonical.hpp"
#include "mcgraph/error.hpp"

namespace mcg {

WheelSpec WheelSpec::Plain(int k) {
  return WheelSpec{k, std::vector<int>(std::max(k, 0), 1)};
}

int WheelSpec::hub_degree() const {
  return std::accumulate(mults.begin(), mults.end(), 0);
}

void ValidateWheelSpec(const WheelSpec& spec) {
  if (spec.k < 3) {
    throw Error(ErrorCode::kBadSpec, "rim length must be at least 3");
  }
  if (static_cast<int>(spec.mults.size()) != spec.k) {
    throw Error(ErrorCode::kBadSpec, "need one multiplicity per rim vertex");
  }
  for (int m : spec.mults) {
    if (m < 1) throw Error(ErrorCode::kBadSpec, "multiplicities must be >= 1");
  }
  if (spec.k + 1 > kMaxVertices) {
    throw Error(ErrorCode::kBoundExceeded, "wheel too large");
  }
}

Multigraph MakeWheel(const WheelSpec& spec) {
  ValidateWheelSpec(spec);
  std::vector<Edge> edges;
  for (int i = 1; i <= spec.k; ++i) edges.push_back({i, i % spec.k + 1});
  for (int i = 1; i <= spec.k; ++i) {
    for (int c = 0; c < spec.mults[i - 1]; ++c) edges.push_back({kWheelHub, i});
  }
  return Multigraph(spec.k + 1, std::move(edges));
}

namespace {

std::vector<int> DihedralMin(const std::vector<int>& m) {
  const int k = static_cast<int>(m.size());
  std::vector<int> best = m;
  std::vector<int> cand(k);
  for (int s = 0; s < k; ++s) {
    for (int dir = 0; dir < 2; ++dir) {
      for (int i = 0; i < k; ++i) {
        cand[i] = dir == 0 ? m[(s + i) % k] : m[((s - i) % k + k) % k];
      }
      best = std::min(best, cand);
    }
  }
  return best;
}

}  // namespace

std::vector<WheelSpec> WheelSpecsUpToSymmetry(int k, int max_mult) {
  if (k < 3 || max_mult < 1) {
    throw Error(ErrorCode::kBadSpec, "need k >= 3 and max_mult >= 1");
  }
  std::vector<WheelSpec> out;
  std::vector<int> m(k, 1);
  while (true) {
    if (DihedralMin(m) == m) out.push_back(WheelSpec{k, m});
    int i = k - 1;
    while (i >= 0 && m[i] == max_mult) m[i--] = 1;
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

namespace {

void CheckSplice(const Multigraph& g, VertexId u, const Multigraph& h,
                 VertexId v, const std::vector<int>& theta) {
  g.check_vertex(u);
  h.check_vertex(v);
  if (g.degree(u) != h.degree(v)) {
    throw Error(ErrorCode::kDegreeMismatch,
                "d_G(u) = " + std::to_string(g.degree(u)) +
                    " but d_H(v) = " + std::to_string(h.degree(v)));
  }
  const int d = g.degree(u);
  if (static_cast<int>(theta.size()) != d) {
    throw Error(ErrorCode::kNotABijection, "theta has the wrong length");
  }
  std::vector<bool> seen(d, false);
  for (int j : theta) {
    if (j < 0 || j >= d || seen[j]) {
      throw Error(ErrorCode::kNotABijection, "theta is not a permutation");
    }
    seen[j] = true;
  }
}

}  // namespace

SpliceResult SpliceWithMaps(const Multigraph& g, VertexId u, const Multigraph& h,
                            VertexId v, const std::vector<int>& theta) {
  CheckSplice(g, u, h, v, theta);
  const int n = g.num_vertices() + h.num_vertices() - 2;
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kBoundExceeded, "splice result too large");
  }
  SpliceResult out;
  out.g_map.assign(g.num_vertices(), -1);
  out.h_map.assign(h.num_vertices(), -1);
  int next = 0;
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    if (x != u) out.g_map[x] = next++;
  }
  for (VertexId y = 0; y < h.num_vertices(); ++y) {
    if (y != v) out.h_map[y] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!e.touches(u)) edges.push_back({out.g_map[e.u], out.g_map[e.v]});
  }
  for (const Edge& e : h.edges()) {
    if (!e.touches(v)) edges.push_back({out.h_map[e.u], out.h_map[e.v]});
  }
  auto gb = g.incident_edges(u);
  auto hb = h.incident_edges(v);
  for (size_t i = 0; i < theta.size(); ++i) {
    VertexId x = g.edge(gb[theta[i]]).other(u);
    VertexId y = h.edge(hb[i]).other(v);
    edges.push_back({out.g_map[x], out.h_map[y]});
  }
  out.graph = Multigraph(n, std::move(edges));
  return out;
}

Multigraph Splice(const Multigraph& g, VertexId u, const Multigraph& h,
                  VertexId v, const std::vector<int>& theta) {
  return SpliceWithMaps(g, u, h, v, theta).graph;
}

std::vector<std::vector<VertexId>> AutomorphismsFixing(const Multigraph& g,
                                                       VertexId u, int limit) {
  g.check_vertex(u);
  const int n = g.num_vertices();
  std::vector<int> mult(n * n, 0);
  for (const Edge& e : g.edges()) {
    ++mult[e.u * n + e.v];
    ++mult[e.v * n + e.u];
  }
  // BFS order from u so every later vertex has an already mapped neighbor
  // inside its component.
  std::vector<VertexId> order{u};
  VertexSet placed = Bit(u);
  for (size_t i = 0; i < order.size() || Size(placed) < n; ++i) {
    if (i == order.size()) {
      VertexId w = Lowest(~placed & g.all_vertices());
      order.push_back(w);
      placed |= Bit(w);
    }
    ForEach(g.neighbor_set(order[i]) & ~placed, [&](VertexId w) {
      order.push_back(w);
      placed |= Bit(w);
    });
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> map(n, -1);
  VertexSet used = 0;
  std::function<void(int)> extend = [&](int depth) {
    if (static_cast<int>(out.size()) >= limit) return;
    if (depth == n) {
      out.push_back(map);
      return;
    }
    VertexId x = order[depth];
    for (VertexId y = 0; y < n; ++y) {
      if (Contains(used, y) || g.degree(y) != g.degree(x)) continue;
      if (depth == 0 && y != u) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        VertexId a = order[i];
        ok = mult[x * n + a] == mult[y * n + map[a]];
      }
      if (!ok) continue;
      map[x] = y;
      used |= Bit(y);
      extend(depth + 1);
      used &= ~Bit(y);
      map[x] = -1;
    }
  };
  extend(0);
  return out;
}

namespace {

struct SideInfo {
  std::vector<VertexId> nbrs;    // distinct neighbors, ascending
  std::vector<int> margin;       // multiplicity toward each neighbor
  std::vector<std::vector<int>> slots;  // boundary positions per neighbor
};

SideInfo Side(const Multigraph& g, VertexId u) {
  SideInfo s;
  s.nbrs = g.neighbors(u);
  s.margin.assign(s.nbrs.size(), 0);
  s.slots.assign(s.nbrs.size(), {});
  auto b = g.incident_edges(u);
  for (size_t i = 0; i < b.size(); ++i) {
    VertexId x = g.edge(b[i]).other(u);
    auto it = std::lower_bound(s.nbrs.begin(), s.nbrs.end(), x);
    size_t r = it - s.nbrs.begin();
    ++s.margin[r];
    s.slots[r].push_back(static_cast<int>(i));
  }
  return s;
}

// Permutations of the neighbor list induced by automorphisms fixing u.
std::vector<std::vector<int>> InducedPerms(const Multigraph& g, VertexId u,
                                           const SideInfo& s) {
  std::set<std::vector<int>> perms;
  for (const auto& a : AutomorphismsFixing(g, u)) {
    std::vector<int> p(s.nbrs.size());
    for (size_t i = 0; i < s.nbrs.size(); ++i) {
      p[i] = static_cast<int>(
          std::lower_bound(s.nbrs.begin(), s.nbrs.end(), a[s.nbrs[i]]) -
          s.nbrs.begin());
    }
    perms.insert(p);
  }
  return {perms.begin(), perms.end()};
}

}  // namespace

namespace {

std::vector<int> ThetaFromSides(const SideInfo& gs, const SideInfo& hs,
                                int degree, const SpliceTable& table) {
  if (table.rows != static_cast<int>(gs.nbrs.size()) ||
      table.cols != static_cast<int>(hs.nbrs.size())) {
    throw Error(ErrorCode::kNotABijection, "table shape does not match");
  }
  std::vector<int> theta(degree, -1);
  std::vector<size_t> gnext(table.rows, 0);
  std::vector<size_t> hnext(table.cols, 0);
  for (int r = 0; r < table.rows; ++r) {
    for (int c = 0; c < table.cols; ++c) {
      for (int t = 0; t < table.at(r, c); ++t) {
        if (gnext[r] >= gs.slots[r].size() || hnext[c] >= hs.slots[c].size()) {
          throw Error(ErrorCode::kNotABijection, "table margins do not match");
        }
        theta[hs.slots[c][hnext[c]++]] = gs.slots[r][gnext[r]++];
      }
    }
  }
  for (int j : theta) {
    if (j < 0) throw Error(ErrorCode::kNotABijection, "table margins too small");
  }
  return theta;
}

}  // namespace

std::vector<int> ThetaFromTable(const Multigraph& g, VertexId u,
                                const Multigraph& h, VertexId v,
                                const SpliceTable& table) {
  return ThetaFromSides(Side(g, u), Side(h, v), h.degree(v), table);
}

SpliceTable TableFromTheta(const Multigraph& g, VertexId u, const Multigraph& h,
                           VertexId v, const std::vector<int>& theta) {
  CheckSplice(g, u, h, v, theta);
  SideInfo gs = Side(g, u);
  SideInfo hs = Side(h, v);
  SpliceTable t{static_cast<int>(gs.nbrs.size()),
                static_cast<int>(hs.nbrs.size()), {}};
  t.cells.assign(t.rows * t.cols, 0);
  std::vector<int> row_of(g.degree(u));
  std::vector<int> col_of(h.degree(v));
  for (int r = 0; r < t.rows; ++r) {
    for (int p : gs.slots[r]) row_of[p] = r;
  }
  for (int c = 0; c < t.cols; ++c) {
    for (int p : hs.slots[c]) col_of[p] = c;
  }
  for (size_t i = 0; i < theta.size(); ++i) {
    ++t.cells[row_of[theta[i]] * t.cols + col_of[i]];
  }
  return t;
}

void ForEachSpliceTheta(const Multigraph& g, VertexId u, const Multigraph& h,
                        VertexId v,
                        const std::function<bool(const std::vector<int>&)>& visit,
                        bool dedupe) {
  CheckSplice(g, u, h, v, [&] {
    std::vector<int> id(g.degree(u));
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  SideInfo gs = Side(g, u);
  SideInfo hs = Side(h, v);
  const int rows = static_cast<int>(gs.nbrs.size());
  const int cols = static_cast<int>(hs.nbrs.size());
  std::vector<std::vector<int>> row_perms{{}};
  std::vector<std::vector<int>> col_perms{{}};
  if (dedupe) {
    row_perms = InducedPerms(g, u, gs);
    col_perms = InducedPerms(h, v, hs);
  }
  SpliceTable table{rows, cols, std::vector<int>(rows * cols, 0)};

  auto invert = [](std::vector<std::vector<int>>& perms) {
    for (auto& p : perms) {
      std::vector<int> inv(p.size());
      for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
      p = std::move(inv);
    }
  };
  invert(row_perms);
  invert(col_perms);

  // Lex-least table in its orbit; the image is compared cell by cell.
  auto canonical = [&]() {
    if (!dedupe) return true;
    for (const auto& pi : row_perms) {
      for (const auto& qi : col_perms) {
        int cmp = 0;
        for (int r = 0; r < rows && cmp == 0; ++r) {
          for (int c = 0; c < cols; ++c) {
            int a = table.cells[pi[r] * cols + qi[c]];
            int b = table.cells[r * cols + c];
            if (a != b) {
              cmp = a < b ? -1 : 1;
              break;
            }
          }
        }
        if (cmp < 0) return false;
      }
    }
    return true;
  };

  std::vector<int> col_left = hs.margin;
  bool stop = false;
  // Fills row r from column c onward with `left` units still to place.
  std::function<void(int, int, int)> fill = [&](int r, int c, int left) {
    if (stop) return;
    if (r == rows) {
      if (canonical() && !visit(ThetaFromSides(gs, hs, h.degree(v), table))) {
        stop = true;
      }
      return;
    }
    if (c == cols - 1) {
      if (left > col_left[c]) return;
      table.cells[r * cols + c] = left;
      col_left[c] -= left;
      fill(r + 1, 0, r + 1 < rows ? gs.margin[r + 1] : 0);
      col_left[c] += left;
      table.cells[r * cols + c] = 0;
      return;
    }
    int cap = std::min(left, col_left[c]);
    for (int x = cap; x >= 0 && !stop; --x) {
      table.cells[r * cols + c] = x;
      col_left[c] -= x;
      fill(r, c + 1, left - x);
      col_left[c] += x;
    }
    table.cells[r * cols + c] = 0;
  };
  fill(0, 0, gs.margin[0]);
}

std::vector<std::vector<int>> SpliceThetas(const Multigraph& g, VertexId u,
                                           const Multigraph& h, VertexId v,
                                           bool dedupe) {
  std::vector<std::vector<int>> out;
  ForEachSpliceTheta(
      g, u, h, v,
      [&](const std::vector<int>& theta) {
        out.push_back(theta);
        return true;
      },
      dedupe);
  return out;
}

std::vector<VertexId> VertexOrbitRepresentatives(const Multigraph& g) {
  std::vector<VertexId> rep =
      OrbitRepresentatives(g.num_vertices(), CanonicalLabel(g).automorphisms);
  std::vector<VertexId> out;
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    if (rep[x] == x) out.push_back(x);
  }
  return out;
}

}  // namespace mcg
