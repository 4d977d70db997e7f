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

#include "mcgraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>

#include "mcgraph/error.hpp"

namespace mcg {
namespace {

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Colors = std::array<std::int8_t, kMaxVertices>;

class Searcher {
 public:
  explicit Searcher(const Multigraph& g) : n_(g.num_vertices()) {
    mult_.fill(0);
    for (const Edge& e : g.edges()) {
      ++mult_[e.u * kMaxVertices + e.v];
      ++mult_[e.v * kMaxVertices + e.u];
    }
  }

  CanonicalLabeling Run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.form.bytes = std::string(1, '\0');
      return out;
    }
    std::array<std::uint64_t, kMaxVertices> key{};
    for (VertexId v = 0; v < n_; ++v) {
      std::uint64_t h = 0;
      int degree = 0;
      for (VertexId w = 0; w < n_; ++w) {
        int m = mult_[v * kMaxVertices + w];
        if (m == 0) continue;
        degree += m;
        h += Mix(0x51ed27 + m);
      }
      key[v] = Mix(static_cast<std::uint64_t>(degree)) ^ h;
    }
    Colors colors{};
    colors.fill(0);
    Rank(key, colors);
    std::vector<VertexId> prefix;
    Descend(colors, prefix);
    out.form = best_form_;
    out.labeling = best_labeling_;
    out.automorphisms = std::move(generators_);
    return out;
  }

 private:
  // Reassigns colors[v] to the rank of (colors[v], key[v]); returns the
  // number of distinct classes.
  int Rank(const std::array<std::uint64_t, kMaxVertices>& key,
           Colors& colors) const {
    std::array<int, kMaxVertices> order;
    std::iota(order.begin(), order.begin() + n_, 0);
    std::sort(order.begin(), order.begin() + n_, [&](int a, int b) {
      if (colors[a] != colors[b]) return colors[a] < colors[b];
      return key[a] < key[b];
    });
    int rank = -1;
    std::int8_t prev_color = -1;
    std::uint64_t prev_key = 0;
    Colors next{};
    for (int i = 0; i < n_; ++i) {
      int v = order[i];
      if (i == 0 || colors[v] != prev_color || key[v] != prev_key) ++rank;
      prev_color = colors[v];
      prev_key = key[v];
      next[v] = static_cast<std::int8_t>(rank);
    }
    colors = next;
    return rank + 1;
  }

  int CountCells(const Colors& colors) const {
    int top = 0;
    for (int v = 0; v < n_; ++v) top = std::max<int>(top, colors[v]);
    return top + 1;
  }

  void Refine(Colors& colors) const {
    int cells = CountCells(colors);
    std::array<std::uint64_t, kMaxVertices> key;
    while (cells < n_) {
      for (VertexId v = 0; v < n_; ++v) {
        std::uint64_t h = 0;
        const std::uint8_t* row = &mult_[v * kMaxVertices];
        for (VertexId w = 0; w < n_; ++w) {
          if (row[w] != 0) h += Mix((std::uint64_t(colors[w]) << 8) | row[w]);
        }
        key[v] = h;
      }
      int next = Rank(key, colors);
      if (next == cells) break;
      cells = next;
    }
  }

  CanonicalForm FormOf(const Colors& colors,
                       std::vector<VertexId>& labeling) const {
    labeling.assign(n_, 0);
    for (VertexId v = 0; v < n_; ++v) labeling[colors[v]] = v;
    CanonicalForm form;
    form.bytes.reserve(1 + n_ * (n_ - 1) / 2);
    form.bytes.push_back(static_cast<char>(n_));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        form.bytes.push_back(static_cast<char>(
            mult_[labeling[i] * kMaxVertices + labeling[j]]));
      }
    }
    return form;
  }

  // Returns the depth to unwind to; a value >= the caller's depth means keep
  // going.
  int Descend(Colors colors, std::vector<VertexId>& prefix) {
    Refine(colors);
    const int depth = static_cast<int>(prefix.size());
    if (CountCells(colors) == n_) return Leaf(colors, prefix);

    // Target cell: the first cell with more than one vertex.
    std::array<int, kMaxVertices> cell_size{};
    for (int v = 0; v < n_; ++v) ++cell_size[colors[v]];
    int target = 0;
    while (cell_size[target] == 1) ++target;

    std::vector<VertexId> explored;
    for (VertexId v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (!explored.empty() && SameOrbitAsExplored(v, explored, prefix)) {
        continue;
      }
      Colors child = colors;
      for (int w = 0; w < n_; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      prefix.push_back(v);
      int unwind = Descend(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
      if (unwind < depth) return unwind;
    }
    return depth;
  }

  bool SameOrbitAsExplored(VertexId v, const std::vector<VertexId>& explored,
                           const std::vector<VertexId>& prefix) const {
    std::array<int, kMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (VertexId p : prefix) fixes = fixes && gen[p] == p;
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        int a = find(x);
        int b = find(gen[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (VertexId w : explored) {
      if (find(w) == root) return true;
    }
    return false;
  }

  int Leaf(const Colors& colors, const std::vector<VertexId>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    std::vector<VertexId> labeling;
    CanonicalForm form = FormOf(colors, labeling);
    if (first_labeling_.empty()) {
      first_form_ = form;
      first_labeling_ = labeling;
      first_path_ = prefix;
      best_form_ = std::move(form);
      best_labeling_ = std::move(labeling);
      return depth;
    }
    if (form == first_form_) {
      AddAutomorphism(first_labeling_, labeling);
      // Everything below the divergence from the first path is equivalent to
      // an explored subtree.
      int common = 0;
      while (common < depth && common < static_cast<int>(first_path_.size()) &&
             first_path_[common] == prefix[common]) {
        ++common;
      }
      return common;
    }
    if (form == best_form_) {
      AddAutomorphism(best_labeling_, labeling);
      return depth;
    }
    if (form < best_form_) {
      best_form_ = std::move(form);
      best_labeling_ = std::move(labeling);
    }
    return depth;
  }

  void AddAutomorphism(const std::vector<VertexId>& from,
                       const std::vector<VertexId>& to) {
    std::vector<VertexId> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    generators_.push_back(std::move(gamma));
  }

  int n_;
  std::array<std::uint8_t, kMaxVertices * kMaxVertices> mult_;
  CanonicalForm first_form_;
  std::vector<VertexId> first_labeling_;
  std::vector<VertexId> first_path_;
  CanonicalForm best_form_;
  std::vector<VertexId> best_labeling_;
  std::vector<std::vector<VertexId>> generators_;
};

}  // namespace

CanonicalLabeling CanonicalLabel(const Multigraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (g.multiplicity(v, w) > 255) {
        throw Error(ErrorCode::kBoundExceeded, "multiplicity above 255");
      }
    }
  }
  return Searcher(g).Run();
}

CanonicalForm Canonical(const Multigraph& g) { return CanonicalLabel(g).form; }

bool IsIsomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges()) {
    return false;
  }
  return Canonical(a) == Canonical(b);
}

Multigraph FromCanonical(const CanonicalForm& form) {
  if (form.bytes.empty()) {
    throw Error(ErrorCode::kParseError, "empty canonical form");
  }
  const int n = static_cast<unsigned char>(form.bytes[0]);
  if (static_cast<int>(form.bytes.size()) != 1 + n * (n - 1) / 2) {
    throw Error(ErrorCode::kParseError, "canonical form length mismatch");
  }
  std::vector<Edge> edges;
  std::size_t pos = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int m = static_cast<unsigned char>(form.bytes[pos++]);
      for (int k = 0; k < m; ++k) edges.push_back({i, j});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph Relabel(const Multigraph& g, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Multigraph(g.num_vertices(), std::move(edges));
}

std::vector<VertexId> OrbitRepresentatives(
    int n, const std::vector<std::vector<VertexId>>& generators) {
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : generators) {
    for (int x = 0; x < n; ++x) {
      int a = find(x);
      int b = find(gen[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<VertexId> out(n);
  for (int x = 0; x < n; ++x) out[x] = find(x);
  return out;
}

std::string ToHex(const CanonicalForm& form) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(form.bytes.size() * 2);
  for (unsigned char c : form.bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

}  // namespace mcg
