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


#include "mcgraph/family_g.hpp"

#include <algorithm>

#include "mcgraph/error.hpp"
#include "mcgraph/mc_core.hpp"
#include "mcgraph/parallel.hpp"
#include "mcgraph/wheel_like.hpp"

namespace mcg {

GCertificate LeafCertificate(const WheelSpec& wheel) {
  GCertificate c;
  c.wheel = wheel;
  return c;
}

GCertificate NodeCertificate(const GCertificate& left, const WheelSpec& wheel,
                             VertexId u, VertexId v, std::vector<int> theta) {
  GCertificate c;
  c.wheel = wheel;
  c.left = std::make_shared<const GCertificate>(left);
  c.u = u;
  c.v = v;
  c.theta = std::move(theta);
  return c;
}

Multigraph BuildFromCertificate(const GCertificate& cert) {
  Multigraph h = MakeWheel(cert.wheel);
  if (cert.is_leaf()) return h;
  return Splice(BuildFromCertificate(*cert.left), cert.u, h, cert.v,
                cert.theta);
}

namespace {

int MaxMultiplicity(const Multigraph& g) {
  int best = 0;
  for (const Edge& e : g.edges()) best = std::max(best, g.multiplicity(e.u, e.v));
  return best;
}

// Empty when the wheel belongs to the first level.
std::string LeafProblem(const WheelSpec& w) {
  if (w.k % 2 == 0) return "rim length is even";
  Multigraph g = MakeWheel(w);
  if (!IsBrick(g)) return "wheel is not a brick";
  if (!IsWheelLike(g)) return "wheel is not wheel-like";
  return {};
}

bool IsPlainK4(const Multigraph& h) { return IsK4Plus(h) && h.is_simple(); }

// Empty when conditions 1 and 2 hold for splicing g at u with h at v.
std::pair<int, std::string> NodeProblem(const Multigraph& g, VertexId u,
                                        const Multigraph& h, VertexId v,
                                        const std::vector<int>& theta) {
  const VertexSet ug = MaxDegreeSet(g);
  const VertexSet uh = MaxDegreeSet(h);
  const bool u_in = Contains(ug, u);
  const bool v_in = Contains(uh, v);
  if (IsPlainK4(h)) {
    if (u_in) return {1, "right wheel is K4 and u has maximum degree"};
  } else if (IsK4Plus(h)) {
    if (!v_in) return {1, "right wheel is a K4 variant and v is not a hub"};
  } else if (u_in == v_in) {
    return {1, "splice vertices meet the hub sets twice or not at all"};
  }
  if (h.num_vertices() == 4 && !u_in) {
    const std::vector<EdgeId> removable = RemovableEdges(h);
    auto hb = h.incident_edges(v);
    auto gb = g.incident_edges(u);
    for (std::size_t i = 0; i < hb.size(); ++i) {
      if (std::binary_search(removable.begin(), removable.end(), hb[i])) {
        continue;
      }
      VertexId end = g.edge(gb[theta[i]]).other(u);
      if (Contains(ug, end)) {
        return {2, "a nonremovable edge at v is paired with an edge at a hub"};
      }
    }
  }
  return {0, {}};
}

// Conditions that depend only on the splice vertices.
bool VertexPairAllowed(const Multigraph& g, VertexId u, const Multigraph& h,
                       VertexId v) {
  const bool u_in = Contains(MaxDegreeSet(g), u);
  const bool v_in = Contains(MaxDegreeSet(h), v);
  if (IsPlainK4(h)) return !u_in;
  if (IsK4Plus(h)) return v_in;
  return u_in != v_in;
}

CertificateReport Check(const GCertificate& cert, bool large_left_first,
                        Multigraph* built) {
  CertificateReport r;
  auto fail = [&](int condition, std::string why) {
    r.valid = false;
    r.level = cert.level();
    r.condition = condition;
    r.reason = std::move(why);
    return r;
  };
  std::string leaf = LeafProblem(cert.wheel);
  if (cert.is_leaf()) {
    if (!leaf.empty()) return fail(kLeafCondition, leaf);
    *built = MakeWheel(cert.wheel);
    return r;
  }
  Multigraph g;
  CertificateReport below = Check(*cert.left, large_left_first, &g);
  if (!below.valid) return below;
  if (!leaf.empty()) return fail(kLeafCondition, "right " + leaf);
  if (large_left_first && cert.left->is_leaf() && g.num_vertices() < 6) {
    return fail(kOrientationCondition,
                "first splice has a four-vertex left operand");
  }
  Multigraph h = MakeWheel(cert.wheel);
  *built = Splice(g, cert.u, h, cert.v, cert.theta);
  if (built->num_vertices() < 8) {
    return fail(kSizeCondition, "spliced graph has fewer than 8 vertices");
  }
  auto [condition, why] = NodeProblem(g, cert.u, h, cert.v, cert.theta);
  if (condition != 0) return fail(condition, why);
  return r;
}

}  // namespace

CertificateReport CheckCertificate(const GCertificate& cert,
                                   bool large_left_first) {
  Multigraph built;
  return Check(cert, large_left_first, &built);
}

void VerifyCertificate(const GCertificate& cert, bool large_left_first) {
  CertificateReport r = CheckCertificate(cert, large_left_first);
  if (!r.valid) {
    throw Error(ErrorCode::kConditionViolated,
                "level " + std::to_string(r.level) + " condition " +
                    std::to_string(r.condition) + ": " + r.reason);
  }
}

nlohmann::ordered_json CertificateToJson(const GCertificate& cert) {
  nlohmann::ordered_json wheel;
  wheel["k"] = cert.wheel.k;
  wheel["mults"] = cert.wheel.mults;
  if (cert.is_leaf()) return wheel;
  nlohmann::ordered_json j;
  j["left"] = CertificateToJson(*cert.left);
  j["right"] = wheel;
  j["u"] = cert.u;
  j["v"] = cert.v;
  j["theta"] = cert.theta;
  return j;
}

namespace {

WheelSpec WheelFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("mults")) {
    throw Error(ErrorCode::kParseError, "wheel needs k and mults");
  }
  WheelSpec w{j.at("k").get<int>(), j.at("mults").get<std::vector<int>>()};
  ValidateWheelSpec(w);
  return w;
}

}  // namespace

GCertificate CertificateFromJson(const nlohmann::json& j) {
  try {
    if (!j.is_object()) {
      throw Error(ErrorCode::kParseError, "certificate must be an object");
    }
    if (!j.contains("left")) return LeafCertificate(WheelFromJson(j));
    for (const char* key : {"right", "u", "v", "theta"}) {
      if (!j.contains(key)) {
        throw Error(ErrorCode::kParseError, std::string("node lacks ") + key);
      }
    }
    return NodeCertificate(CertificateFromJson(j.at("left")),
                           WheelFromJson(j.at("right")), j.at("u").get<int>(),
                           j.at("v").get<int>(),
                           j.at("theta").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError, e.what());
  }
}

namespace {

struct WorkItem {
  const ClosureEntry* left;
  const ClosureEntry* right;
  VertexId u;
  VertexId v;
};

struct Candidate {
  CanonicalForm form;
  Multigraph graph;
  std::vector<int> theta;
};

std::vector<Candidate> RunItem(const WorkItem& item, const ClosureOptions& opt) {
  std::vector<Candidate> out;
  const Multigraph& g = item.left->graph;
  const Multigraph& h = item.right->graph;
  ForEachSpliceTheta(g, item.u, h, item.v, [&](const std::vector<int>& theta) {
    if (NodeProblem(g, item.u, h, item.v, theta).first != 0) return true;
    Multigraph s = Splice(g, item.u, h, item.v, theta);
    if (MaxMultiplicity(s) > opt.max_mult) return true;
    out.push_back({Canonical(s), std::move(s), theta});
    return true;
  });
  return out;
}

}  // namespace

GClosure::GClosure(const ClosureOptions& options) : options_(options) {
  if (options_.max_n > kClosureVertexBound) {
    throw Error(ErrorCode::kBoundExceeded,
                "closure is limited to " + std::to_string(kClosureVertexBound) +
                    " vertices");
  }
  std::vector<ClosureEntry> leaves;
  std::map<CanonicalForm, int> seen;
  for (int k = 3; k + 1 <= options_.max_n; k += 2) {
    for (const WheelSpec& w : WheelSpecsUpToSymmetry(k, options_.leaf_mult)) {
      if (!LeafProblem(w).empty()) continue;
      Multigraph g = MakeWheel(w);
      CanonicalForm f = Canonical(g);
      if (!seen.emplace(f, 1).second) continue;
      leaves.push_back({f, std::move(g),
                        std::make_shared<const GCertificate>(LeafCertificate(w)),
                        1});
    }
  }
  levels_.push_back(std::move(leaves));

  while (true) {
    const std::vector<ClosureEntry>& prev = levels_.back();
    const std::vector<ClosureEntry>& first = levels_.front();
    std::vector<WorkItem> items;
    for (const ClosureEntry& l : prev) {
      for (const ClosureEntry& r : first) {
        int n = l.graph.num_vertices() + r.graph.num_vertices() - 2;
        if (n < 8 || n > options_.max_n) continue;
        if (options_.large_left_first && l.level == 1 &&
            l.graph.num_vertices() < 6) {
          continue;
        }
        for (VertexId u : VertexOrbitRepresentatives(l.graph)) {
          for (VertexId v : VertexOrbitRepresentatives(r.graph)) {
            if (l.graph.degree(u) != r.graph.degree(v)) continue;
            if (!VertexPairAllowed(l.graph, u, r.graph, v)) continue;
            items.push_back({&l, &r, u, v});
          }
        }
      }
    }
    if (items.empty()) break;
    std::vector<std::vector<Candidate>> results =
        ParallelMap<std::vector<Candidate>>(items.size(), [&](std::size_t i) {
          return RunItem(items[i], options_);
        });
    std::vector<ClosureEntry> next;
    std::map<CanonicalForm, int> level_seen;
    const int j = static_cast<int>(levels_.size()) + 1;
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (Candidate& c : results[i]) {
        if (!level_seen.emplace(c.form, 1).second) continue;
        auto cert = std::make_shared<const GCertificate>(
            NodeCertificate(*items[i].left->cert, items[i].right->cert->wheel,
                            items[i].u, items[i].v, std::move(c.theta)));
        next.push_back({c.form, std::move(c.graph), cert, j});
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const ClosureEntry& a, const ClosureEntry& b) {
                return a.form < b.form;
              });
    levels_.push_back(std::move(next));
  }
  for (int j = 0; j < num_levels(); ++j) {
    for (int i = 0; i < static_cast<int>(levels_[j].size()); ++i) {
      index_.emplace(levels_[j][i].form, std::make_pair(j, i));
    }
  }
}

std::vector<const ClosureEntry*> GClosure::members() const {
  std::vector<const ClosureEntry*> out;
  for (const auto& [form, pos] : index_) {
    out.push_back(&levels_[pos.first][pos.second]);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ClosureEntry* a, const ClosureEntry* b) {
                     return a->level < b->level;
                   });
  return out;
}

const ClosureEntry* GClosure::Find(const Multigraph& g) const {
  auto it = index_.find(Canonical(g));
  if (it == index_.end()) return nullptr;
  return &levels_[it->second.first][it->second.second];
}

std::optional<GCertificate> SearchGCertificate(const Multigraph& g,
                                               int leaf_mult, int max_mult,
                                               bool large_left_first) {
  if (g.num_vertices() > kClosureVertexBound) {
    throw Error(ErrorCode::kBoundExceeded, "graph too large for the closure");
  }
  if (!IsBrick(g)) throw Error(ErrorCode::kNotABrick, "graph is not a brick");
  ClosureOptions opt{g.num_vertices(), leaf_mult,
                     std::max(max_mult, MaxMultiplicity(g)), large_left_first};
  GClosure closure(opt);
  if (const ClosureEntry* e = closure.Find(g)) return *e->cert;
  return std::nullopt;
}

}  // namespace mcg
