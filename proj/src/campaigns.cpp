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

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "mcgraph/bipartite_tools.hpp"
#include "mcgraph/campaigns.hpp"
#include "mcgraph/canonical.hpp"
#include "mcgraph/cuts.hpp"
#include "mcgraph/decomposition.hpp"
#include "mcgraph/enumerate.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/family_g.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/matching.hpp"
#include "mcgraph/mc_core.hpp"
#include "mcgraph/named_graphs.hpp"
#include "mcgraph/parallel.hpp"
#include "mcgraph/splice.hpp"
#include "mcgraph/wheel_like.hpp"

namespace mcg {
namespace {

using Clock = std::chrono::steady_clock;

constexpr unsigned long kDefaultSeed = 2026;

// Result of one work item, merged into the report in item order.
struct Outcome {
  std::vector<std::pair<std::string, long>> counts;
  std::vector<Json> verdicts;
  std::vector<Counterexample> failures;

  void Count(const std::string& key, long by = 1) { counts.emplace_back(key, by); }
  void Fail(const Multigraph& g, std::string reason, Json detail = Json::object()) {
    failures.push_back({g, std::move(reason), std::move(detail)});
  }
};

class Builder {
 public:
  Builder(std::string name, Json params, const std::vector<std::string>& counters) {
    report_.campaign = std::move(name);
    report_.params = std::move(params);
    report_.summary["status"] = "pass";
    for (const std::string& c : counters) report_.summary[c] = 0;
  }

  void Merge(Outcome&& o) {
    for (auto& [key, by] : o.counts) {
      if (!report_.summary.contains(key)) {
        throw std::logic_error("undeclared counter " + key);
      }
      report_.summary[key] = report_.summary[key].get<long>() + by;
    }
    for (Json& v : o.verdicts) report_.verdicts.push_back(std::move(v));
    for (Counterexample& c : o.failures) {
      report_.counterexamples.push_back(std::move(c));
    }
  }

  void Summary(const std::string& key, Json value) {
    report_.summary[key] = std::move(value);
  }

  CampaignReport Finish() {
    report_.summary["status"] = report_.passed() ? "pass" : "fail";
    report_.summary["counterexamples"] =
        static_cast<long>(report_.counterexamples.size());
    return std::move(report_);
  }

 private:
  CampaignReport report_;
};

// Resolves campaign parameters against defaults and ceilings, records them
// in order and rejects options the campaign does not read.
class Resolver {
 public:
  Resolver(std::string campaign, const CampaignParams& p, const Ceilings& c)
      : campaign_(std::move(campaign)), p_(p), c_(c) {}

  int MaxN(int def, int lo, int ceiling) {
    used_max_n_ = true;
    const int v = p_.max_n.value_or(def);
    const int cap = c_.max_n.value_or(ceiling);
    if (v < lo) Bad("--max-n must be at least " + std::to_string(lo));
    if (v > cap) {
      Bound("max_n " + std::to_string(v) + " above ceiling " +
            std::to_string(cap) + " (MCGRAPH_MAX_N)");
    }
    params_["max_n"] = v;
    return v;
  }

  int Mult(int def) {
    used_mult_ = true;
    const int v = p_.mult_bound.value_or(def);
    if (v < 1) Bad("--mult-bound must be at least 1");
    if (v > c_.mult) {
      Bound("mult_bound " + std::to_string(v) + " above ceiling " +
            std::to_string(c_.mult) + " (MCGRAPH_MAX_MULT)");
    }
    params_["mult_bound"] = v;
    return v;
  }

  int Seeds(int def) {
    used_seeds_ = true;
    const int v = p_.seeds.value_or(def);
    if (v < 1) Bad("--seeds must be at least 1");
    if (v > c_.seeds) {
      Bound("seeds " + std::to_string(v) + " above ceiling " +
            std::to_string(c_.seeds) + " (MCGRAPH_MAX_SEEDS)");
    }
    params_["seeds"] = v;
    return v;
  }

  long Samples(long def) {
    used_samples_ = true;
    const long v = p_.samples.value_or(def);
    if (v < 0) Bad("--samples must be nonnegative");
    if (v > c_.samples) {
      Bound("samples " + std::to_string(v) + " above ceiling " +
            std::to_string(c_.samples) + " (MCGRAPH_MAX_SAMPLES)");
    }
    params_["samples_per_n"] = v;
    return v;
  }

  unsigned long Seed() {
    used_seed_ = true;
    const unsigned long v = p_.seed.value_or(kDefaultSeed);
    params_["seed"] = v;
    return v;
  }

  bool ExcludeHubPairs() {
    used_exclude_ = true;
    params_["exclude_hub_pairs"] = p_.exclude_hub_pairs;
    return p_.exclude_hub_pairs;
  }

  // Odd wheel sizes k with k + 1 <= max_n; all of them by default.
  std::vector<int> Wheels(int max_n) {
    used_wheels_ = true;
    std::vector<int> ks = p_.wheels;
    if (ks.empty()) {
      for (int k = 3; k + 1 <= max_n; k += 2) ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks) {
      if (k < 3 || k % 2 == 0) Bad("--wheels takes odd sizes of at least 3");
      if (k + 1 > max_n) {
        Bad("wheel size " + std::to_string(k) + " exceeds max_n " + std::to_string(max_n));
      }
    }
    params_["wheels"] = ks;
    return ks;
  }

  bool HasCorpus() const { return !p_.corpus.empty(); }

  std::vector<Multigraph> Corpus() {
    used_corpus_ = true;
    std::vector<Multigraph> graphs = ReadGraphFile(p_.corpus);
    for (const Multigraph& g : graphs) {
      if (g.num_vertices() > c_.corpus_n) {
        Bound("corpus graph with " + std::to_string(g.num_vertices()) +
              " vertices above ceiling " + std::to_string(c_.corpus_n) +
              " (MCGRAPH_CORPUS_MAX_N)");
      }
    }
    params_["corpus"] = p_.corpus;
    params_["corpus_graphs"] = static_cast<long>(graphs.size());
    return graphs;
  }

  // Corpus graphs when a corpus is given, else enumerate(max_n). Parameters
  // resolve now; enumeration runs when the result is called.
  std::function<std::vector<Multigraph>()> Graphs(
      int def, int lo, int ceiling,
      std::function<std::vector<Multigraph>(int)> enumerate) {
    if (HasCorpus()) {
      return [graphs = Corpus()] { return graphs; };
    }
    const int max_n = MaxN(def, lo, ceiling);
    return [max_n, enumerate = std::move(enumerate)] { return enumerate(max_n); };
  }

  bool AllVerdicts() const { return p_.all_verdicts; }

  // Rejects unread options and returns the parameter block.
  Json Done() {
    auto reject = [&](bool set, bool used, const char* flag) {
      if (set && !used) Bad(std::string(flag) + " is not used by this campaign");
    };
    reject(p_.max_n.has_value(), used_max_n_, "--max-n");
    reject(p_.mult_bound.has_value(), used_mult_, "--mult-bound");
    reject(p_.seeds.has_value(), used_seeds_, "--seeds");
    reject(p_.samples.has_value(), used_samples_, "--samples");
    reject(p_.seed.has_value(), used_seed_, "--seed");
    reject(!p_.corpus.empty(), used_corpus_, "--corpus");
    reject(p_.exclude_hub_pairs, used_exclude_, "--exclude-hub-pairs");
    reject(!p_.wheels.empty(), used_wheels_, "--wheels");
    if (p_.all_verdicts) params_["all_verdicts"] = true;
    return params_;
  }

 private:
  [[noreturn]] void Bad(const std::string& msg) const {
    throw Error(ErrorCode::kBadSpec, campaign_ + ": " + msg);
  }
  [[noreturn]] void Bound(const std::string& msg) const {
    throw Error(ErrorCode::kBoundExceeded, campaign_ + ": " + msg);
  }

  std::string campaign_;
  const CampaignParams& p_;
  const Ceilings& c_;
  Json params_ = Json::object();
  bool used_max_n_ = false;
  bool used_mult_ = false;
  bool used_seeds_ = false;
  bool used_samples_ = false;
  bool used_seed_ = false;
  bool used_corpus_ = false;
  bool used_exclude_ = false;
  bool used_wheels_ = false;
};

// Applies eval to every graph in parallel and merges in input order.
void RunGraphs(Builder& b, const std::vector<Multigraph>& graphs,
               const std::function<void(const Multigraph&, Outcome&)>& eval) {
  std::vector<Outcome> outs = ParallelMap<Outcome>(graphs.size(), [&](std::size_t i) {
    Outcome o;
    eval(graphs[i], o);
    return o;
  });
  for (Outcome& o : outs) b.Merge(std::move(o));
}

std::vector<Multigraph> Connected(int lo, int hi, int step, int min_degree) {
  std::vector<Multigraph> out;
  for (int n = lo; n <= hi; n += step) {
    for (Multigraph& g : EnumerateConnectedGraphs(n, min_degree)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Multigraph> ConnectedBipartite(int lo, int hi, int min_degree) {
  std::vector<Multigraph> out;
  for (int n = lo; n <= hi; n += 2) {
    for (Multigraph& g : EnumerateConnectedBipartiteGraphs(n, min_degree)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Multigraph> SimpleBricks(int lo, int hi) {
  std::vector<Multigraph> out;
  for (Multigraph& g : Connected(lo, hi, 2, 3)) {
    if (IsBrick(g)) out.push_back(std::move(g));
  }
  return out;
}

// Multiplicity variants of the matching covered members of `graphs` with at
// most max_n vertices, excluding the simple graphs themselves.
std::vector<Multigraph> MultiVariants(const std::vector<Multigraph>& graphs,
                                      int max_n, int mult) {
  std::vector<Multigraph> out;
  if (mult < 2) return out;
  for (const Multigraph& g : graphs) {
    if (g.num_vertices() > max_n || !IsMatchingCovered(g)) continue;
    for (Multigraph& m : ParallelVariants(g, mult)) {
      if (!m.is_simple()) out.push_back(std::move(m));
    }
  }
  return out;
}

Json Verdict(const Multigraph& g) { return GraphSummary(g); }

Json SpecJson(const WheelSpec& w) {
  Json j;
  j["k"] = w.k;
  j["mults"] = w.mults;
  return j;
}

bool MultiplesTouch(const Multigraph& g, VertexId h) {
  for (const Edge& e : g.edges()) {
    if (g.multiplicity(e.u, e.v) > 1 && !e.touches(h)) return false;
  }
  return true;
}

// Maximum matching size by exhaustive branching on the lowest vertex.
int BruteForceMatchingSize(const BitAdjacency& adj, VertexSet left) {
  if (left == 0) return 0;
  const VertexId v = Lowest(left);
  const VertexSet rest = left & ~Bit(v);
  int best = BruteForceMatchingSize(adj, rest);
  ForEach(adj.rows[v] & rest, [&](VertexId w) {
    best = std::max(best, 1 + BruteForceMatchingSize(adj, rest & ~Bit(w)));
  });
  return best;
}

// Uniform labeled connected graph on n vertices by rejection from G(n, 1/2).
Multigraph RandomConnected(int n, std::mt19937_64& rng) {
  while (true) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() & 1U) edges.push_back({i, j});
      }
    }
    Multigraph g(n, std::move(edges));
    if (IsConnected(g)) return g;
  }
}

CampaignReport MatchingOracle(Resolver& r) {
  const int max_n = r.MaxN(8, 1, 10);
  const long samples = r.Samples(10000);
  const unsigned long seed = r.Seed();
  Builder b("matching-oracle", r.Done(),
            {"exhaustive_graphs", "sampled_graphs", "mismatches"});
  auto check = [](const Multigraph& g, Outcome& o) {
    const Matching m = MaxMatching(g);
    VertexSet covered = 0;
    bool valid = true;
    for (EdgeId e : m.edges) {
      const Edge& ed = g.edge(e);
      if ((covered & (Bit(ed.u) | Bit(ed.v))) != 0) valid = false;
      covered |= Bit(ed.u) | Bit(ed.v);
    }
    valid = valid && covered == m.covered;
    const int best = BruteForceMatchingSize(g.adjacency(), g.all_vertices());
    if (!valid || m.size() != best) {
      o.Count("mismatches");
      Json d;
      d["matching_size"] = m.size();
      d["optimum"] = best;
      d["valid_matching"] = valid;
      o.Fail(g, "maximum matching differs from the exhaustive optimum", d);
    }
  };
  std::vector<Multigraph> exhaustive = Connected(1, std::min(6, max_n), 1, 0);
  RunGraphs(b, exhaustive, [&](const Multigraph& g, Outcome& o) {
    o.Count("exhaustive_graphs");
    check(g, o);
  });
  std::vector<Multigraph> sampled;
  for (int n = 2; n <= max_n; ++n) {
    std::mt19937_64 rng(seed * 1000003UL + static_cast<unsigned long>(n));
    for (long i = 0; i < samples; ++i) sampled.push_back(RandomConnected(n, rng));
  }
  RunGraphs(b, sampled, [&](const Multigraph& g, Outcome& o) {
    o.Count("sampled_graphs");
    check(g, o);
  });
  return b.Finish();
}

CampaignReport RemovableGoldens(Resolver& r) {
  Builder b("removable-goldens", r.Done(), {"graphs", "mismatches"});
  struct Golden {
    const char* name;
    Multigraph g;
    int singles;
    int doubletons;
    bool rim_check;  // every edge missing vertex 0 is non-removable
  };
  const std::vector<Golden> goldens = {
      {"K4", CompleteGraph(4), 0, 3, false},
      {"prism", TriangularPrism(), 0, 3, false},
      {"W5", Wheel(5), 5, 0, true},
      {"W7", Wheel(7), 7, 0, true},
  };
  for (const Golden& gd : goldens) {
    Outcome o;
    o.Count("graphs");
    const std::vector<EdgeId> singles = RemovableEdges(gd.g);
    const auto doubletons = RemovableDoubletons(gd.g);
    int rim_removable = 0;
    if (gd.rim_check) {
      for (EdgeId e : singles) rim_removable += !gd.g.edge(e).touches(0);
    }
    Json v = Verdict(gd.g);
    v["name"] = gd.name;
    v["singles"] = static_cast<int>(singles.size());
    v["doubletons"] = static_cast<int>(doubletons.size());
    if (gd.rim_check) v["removable_rim_edges"] = rim_removable;
    if (static_cast<int>(singles.size()) != gd.singles ||
        static_cast<int>(doubletons.size()) != gd.doubletons || rim_removable != 0) {
      o.Count("mismatches");
      Json d;
      d["name"] = gd.name;
      d["expected_singles"] = gd.singles;
      d["expected_doubletons"] = gd.doubletons;
      o.Fail(gd.g, std::string(gd.name) + " removable classes differ from golden", d);
    }
    o.verdicts.push_back(std::move(v));
    b.Merge(std::move(o));
  }
  return b.Finish();
}

CampaignReport RemovableClassCounts(Resolver& r) {
  auto graphs = r.Graphs(8, 4, 8, [](int n) { return SimpleBricks(4, n); });
  const bool all = r.AllVerdicts();
  Builder b("thm-1.1", r.Done(),
            {"graphs", "bricks", "excluded_from_edge_count", "class_failures",
             "edge_count_failures"});
  const CanonicalForm k4 = Canonical(CompleteGraph(4));
  const CanonicalForm prism = Canonical(TriangularPrism());
  RunGraphs(b, graphs(), [&](const Multigraph& g, Outcome& o) {
    o.Count("graphs");
    if (!IsBrick(g)) return;
    o.Count("bricks");
    const int delta = g.max_degree();
    const int singles = static_cast<int>(RemovableEdges(g).size());
    const int classes = singles + static_cast<int>(RemovableDoubletons(g).size());
    const CanonicalForm f = Canonical(g);
    const bool excluded = f == k4 || f == prism;
    Json v = Verdict(g);
    v["max_degree"] = delta;
    v["removable_classes"] = classes;
    v["removable_edges"] = singles;
    if (classes < delta) {
      o.Count("class_failures");
      o.Fail(g, "fewer removable classes than the maximum degree", v);
    }
    if (singles < delta - 2) {
      if (excluded) {
        o.Count("excluded_from_edge_count");
        v["excluded_from_edge_count"] = true;
      } else {
        o.Count("edge_count_failures");
        o.Fail(g, "fewer removable edges than the maximum degree minus two", v);
      }
    }
    if (all || excluded) o.verdicts.push_back(std::move(v));
  });
  return b.Finish();
}

// Minimal matching covered graphs with minimum degree at least four; each
// nontrivial maximal barrier must leave at least two W vertices.
void MonitorWSets(const Multigraph& g, Outcome& o) {
  o.Count("min_degree_4");
  if (IsBipartite(g)) return;
  for (const Barrier& bar : MaximalBarriers(g)) {
    if (Size(bar.set) < 2) continue;
    const int w = Size(WSet(ContractBarrier(g, bar.set)));
    if (w < 2) {
      o.Count("w_set_failures");
      Json d;
      d["barrier"] = ToVector(bar.set);
      d["w_size"] = w;
      o.Fail(g, "barrier contraction has fewer than two W vertices", d);
    }
  }
}

CampaignReport MinimalGraphDegrees(Resolver& r) {
  std::function<std::vector<Multigraph>()> graphs;
  if (r.HasCorpus()) {
    graphs = r.Graphs(0, 0, 0, nullptr);
  } else {
    const int max_n = r.MaxN(8, 4, 8);
    const int mult = r.Mult(2);
    graphs = [max_n, mult] {
      std::vector<Multigraph> out = Connected(4, max_n, 2, 1);
      std::vector<Multigraph> more = MultiVariants(out, 6, mult);
      out.insert(out.end(), more.begin(), more.end());
      return out;
    };
  }
  const bool all = r.AllVerdicts();
  Builder b("thm-1.4", r.Done(),
            {"graphs", "multigraphs", "matching_covered", "minimal", "min_degree_2",
             "min_degree_3", "failures", "min_degree_4", "w_set_failures"});
  RunGraphs(b, graphs(), [&](const Multigraph& g, Outcome& o) {
    o.Count("graphs");
    if (!g.is_simple()) o.Count("multigraphs");
    if (g.num_vertices() < 4 || !IsMatchingCovered(g)) return;
    o.Count("matching_covered");
    if (!RemovableEdges(g).empty()) return;
    o.Count("minimal");
    const int delta = g.min_degree();
    Json v = Verdict(g);
    v["min_degree"] = delta;
    if (delta == 2) o.Count("min_degree_2");
    if (delta == 3) o.Count("min_degree_3");
    if (delta != 2 && delta != 3) {
      o.Count("failures");
      o.Fail(g, "minimal matching covered graph with minimum degree outside {2, 3}", v);
    }
    if (delta >= 4) MonitorWSets(g, o);
    if (all) o.verdicts.push_back(std::move(v));
  });
  return b.Finish();
}

// Six-vertex bricks: the simple ones and their variants with parallel edges
// at one vertex.
std::vector<Multigraph> SixVertexBricks(int mult) {
  std::vector<Multigraph> out;
  for (const Multigraph& s : SimpleBricks(6, 6)) {
    out.push_back(s);
    for (Multigraph& m : HubParallelVariants(s, mult)) {
      if (IsBrick(m)) out.push_back(std::move(m));
    }
  }
  return out;
}

bool ExpectedSixVertexWheelLike(const Multigraph& g) {
  static const CanonicalForm w5 = Canonical(Wheel(5));
  const Multigraph simple = UnderlyingSimple(g);
  return Canonical(simple) == w5 && MultiplesTouch(g, Lowest(MaxDegreeSet(simple)));
}

CampaignReport SixVertexWheelLike(Resolver& r) {
  const int mult = r.Mult(2);
  const bool all = r.AllVerdicts();
  Builder b("lemma-3.6", r.Done(), {"bricks", "wheel_like", "mismatches"});
  RunGraphs(b, SixVertexBricks(mult), [&](const Multigraph& g, Outcome& o) {
    o.Count("bricks");
    const bool wl = WheelLikeHubsOfBrick(g) != 0;
    const bool expected = ExpectedSixVertexWheelLike(g);
    if (wl) o.Count("wheel_like");
    Json v = Verdict(g);
    v["wheel_like"] = wl;
    v["expected"] = expected;
    if (wl != expected) {
      o.Count("mismatches");
      o.Fail(g, "wheel-likeness differs from the W5 hub-parallel classification", v);
    }
    if (all || wl) o.verdicts.push_back(std::move(v));
  });
  return b.Finish();
}

CampaignReport OddWheelSplices(Resolver& r) {
  const int max_n = r.MaxN(8, 4, 8);
  const std::vector<int> sizes = r.Wheels(max_n);
  const int mult = r.Mult(2);
  const bool exclude = r.ExcludeHubPairs();
  Builder b("lemma-3.9", r.Done(),
            {"wheels", "vertex_pairs", "splices", "bricks", "wheel_like",
             "predicted", "mismatches"});
  std::vector<WheelSpec> specs;
  for (int k : sizes) {
    for (const WheelSpec& w : WheelSpecsUpToSymmetry(k, mult)) specs.push_back(w);
  }
  struct Item {
    std::size_t a;
    std::size_t b;
    VertexId u;
    VertexId v;
  };
  std::vector<Multigraph> wheels;
  for (const WheelSpec& w : specs) wheels.push_back(MakeWheel(w));
  std::vector<std::vector<VertexId>> reps;
  for (const Multigraph& w : wheels) reps.push_back(VertexOrbitRepresentatives(w));
  std::vector<Item> items;
  for (std::size_t a = 0; a < specs.size(); ++a) {
    for (std::size_t c = a; c < specs.size(); ++c) {
      for (VertexId u : reps[a]) {
        for (VertexId v : reps[c]) {
          if (wheels[a].degree(u) != wheels[c].degree(v)) continue;
          if (exclude && u == kWheelHub && v == kWheelHub) continue;
          items.push_back({a, c, u, v});
        }
      }
    }
  }
  Outcome head;
  head.Count("wheels", static_cast<long>(specs.size()));
  head.Count("vertex_pairs", static_cast<long>(items.size()));
  b.Merge(std::move(head));
  std::vector<Outcome> outs = ParallelMap<Outcome>(items.size(), [&](std::size_t i) {
    const Item& it = items[i];
    const Multigraph& g = wheels[it.a];
    const Multigraph& h = wheels[it.b];
    Outcome o;
    long splices = 0, bricks = 0, wheel_like = 0, predicted = 0;
    ForEachSpliceTheta(g, it.u, h, it.v, [&](const std::vector<int>& theta) {
      ++splices;
      const Multigraph s = Splice(g, it.u, h, it.v, theta);
      if (!IsBrick(s)) return true;
      ++bricks;
      const bool wl = WheelLikeHubsOfBrick(s) != 0;
      const OddWheelSpliceReport rep =
          CheckOddWheelSplice(specs[it.a], it.u, specs[it.b], it.v, theta);
      wheel_like += wl;
      predicted += rep.holds;
      if (wl != rep.holds) {
        o.Count("mismatches");
        Json d;
        d["g"] = SpecJson(specs[it.a]);
        d["u"] = it.u;
        d["h"] = SpecJson(specs[it.b]);
        d["v"] = it.v;
        d["theta"] = theta;
        d["wheel_like"] = wl;
        d["conditions_hold"] = rep.holds;
        d["violated"] = rep.violated;
        d["condition_reason"] = rep.reason;
        o.Fail(s, "wheel-likeness differs from the splice conditions", d);
      }
      return true;
    });
    o.Count("splices", splices);
    o.Count("bricks", bricks);
    o.Count("wheel_like", wheel_like);
    o.Count("predicted", predicted);
    return o;
  });
  for (Outcome& o : outs) b.Merge(std::move(o));
  return b.Finish();
}

CampaignReport ClosureCertificates(Resolver& r) {
  const int max_n = r.MaxN(8, 6, 8);
  const int mult = r.Mult(2);
  Json params = r.Done();
  ClosureOptions opt{max_n, max_n - 3, mult, true};
  params["closure_leaf_mult"] = opt.leaf_mult;
  params["closure_max_mult"] = opt.max_mult;
  Builder b("thm-1.3", params,
            {"closure_members", "candidates", "wheel_like", "certified", "failures"});
  std::vector<Multigraph> candidates = SixVertexBricks(mult);
  for (Multigraph& g : SimpleBricks(4, max_n)) candidates.push_back(std::move(g));
  // Dedup by canonical form, keeping first occurrence order.
  std::set<CanonicalForm> seen;
  std::vector<Multigraph> unique;
  for (Multigraph& g : candidates) {
    if (seen.insert(Canonical(g)).second) unique.push_back(std::move(g));
  }
  const GClosure closure(opt);
  Outcome head;
  head.Count("closure_members", static_cast<long>(closure.members().size()));
  b.Merge(std::move(head));
  RunGraphs(b, unique, [&](const Multigraph& g, Outcome& o) {
    o.Count("candidates");
    if (WheelLikeHubsOfBrick(g) == 0) return;
    o.Count("wheel_like");
    Json v = Verdict(g);
    const ClosureEntry* e = closure.Find(g);
    if (e == nullptr) {
      o.Count("failures");
      o.Fail(g, "wheel-like brick without a certificate in the closure", v);
      o.verdicts.push_back(std::move(v));
      return;
    }
    const CertificateReport rep = CheckCertificate(*e->cert);
    const bool rebuilt = IsIsomorphic(BuildFromCertificate(*e->cert), g);
    v["level"] = e->level;
    v["certificate"] = CertificateToJson(*e->cert);
    if (!rep.valid || !rebuilt) {
      o.Count("failures");
      Json d = v;
      d["certificate_reason"] = rep.reason;
      d["rebuilds"] = rebuilt;
      o.Fail(g, "closure certificate does not check", d);
    } else {
      o.Count("certified");
    }
    o.verdicts.push_back(std::move(v));
  });
  return b.Finish();
}

CampaignReport BipartiteCertificates(Resolver& r) {
  auto graphs = r.Graphs(10, 4, 10, [](int n) { return ConnectedBipartite(2, n, 1); });
  Builder b("lemma-2.16", r.Done(),
            {"graphs", "bipartite_matching_covered", "edges", "non_removable",
             "mismatches"});
  RunGraphs(b, graphs(), [&](const Multigraph& g, Outcome& o) {
    o.Count("graphs");
    if (g.num_edges() < 2 || !IsBipartite(g) || !IsMatchingCovered(g)) return;
    o.Count("bipartite_matching_covered");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      o.Count("edges");
      const bool removable = IsRemovableEdge(g, e);
      const auto cert = FindNonRemovabilityCertificate(g, e);
      const bool cert_ok = cert.has_value() && CheckNonRemovabilityCertificate(g, e, *cert);
      if (!removable) o.Count("non_removable");
      if (removable == cert.has_value() || (cert.has_value() && !cert_ok)) {
        o.Count("mismatches");
        Json d;
        d["edge"] = e;
        d["removable"] = removable;
        d["certificate_found"] = cert.has_value();
        d["certificate_checks"] = cert_ok;
        o.Fail(g, "removability differs from certificate existence", d);
      }
    }
  });
  return b.Finish();
}

// Bipartite graphs for the P-set lemmas: simple ones up to max_n plus
// multiplicity variants up to six vertices.
std::function<std::vector<Multigraph>()> BipartiteSuite(Resolver& r) {
  if (r.HasCorpus()) return r.Graphs(0, 0, 0, nullptr);
  const int max_n = r.MaxN(10, 4, 10);
  const int mult = r.Mult(2);
  return [max_n, mult] {
    std::vector<Multigraph> graphs = ConnectedBipartite(4, max_n, 2);
    std::vector<Multigraph> more = MultiVariants(graphs, 6, mult);
    graphs.insert(graphs.end(), more.begin(), more.end());
    return graphs;
  };
}

CampaignReport BipartitePSets(Resolver& r) {
  auto graphs = BipartiteSuite(r);
  Builder b("lemma-2.17", r.Done(),
            {"graphs", "applicable", "with_p_set", "inner_edges", "failures"});
  RunGraphs(b, graphs(), [&](const Multigraph& g, Outcome& o) {
    o.Count("graphs");
    if (g.num_vertices() < 4 || g.min_degree() < 3 || !IsBipartite(g) ||
        !IsMatchingCovered(g)) {
      return;
    }
    o.Count("applicable");
    const std::optional<PSet> x = MinimumPSet(g);
    if (!x.has_value()) return;
    o.Count("with_p_set");
    const std::vector<EdgeId> removable = RemovableEdges(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (!Contains(x->x, ed.u) || !Contains(x->x, ed.v)) continue;
      o.Count("inner_edges");
      if (!std::binary_search(removable.begin(), removable.end(), e)) {
        o.Count("failures");
        Json d;
        d["p_set"] = ToVector(x->x);
        d["edge"] = e;
        o.Fail(g, "edge inside a minimum P-set is not removable", d);
      }
    }
  });
  return b.Finish();
}

CampaignReport BipartiteDegreeTwo(Resolver& r) {
  auto graphs = BipartiteSuite(r);
  Builder b("lemma-2.18", r.Done(),
            {"graphs", "applicable_sides", "nonadjacent_pair", "degree_two_witness",
             "failures"});
  RunGraphs(b, graphs(), [&](const Multigraph& g, Outcome& o) {
    o.Count("graphs");
    if (g.num_vertices() < 4 || !IsBipartite(g) || !IsMatchingCovered(g)) return;
    const ColorClasses cls = RequireBipartiteMC(g);
    const std::vector<EdgeId> removable = RemovableEdges(g);
    std::vector<char> is_removable(g.num_edges(), 0);
    for (EdgeId e : removable) is_removable[e] = 1;
    const bool pair = HasTwoNonadjacentRemovableEdges(g);
    // Vertices of degree at least four with every incident edge removable.
    bool star = false;
    for (VertexId u = 0; u < g.num_vertices() && !star; ++u) {
      if (g.degree(u) < 4) continue;
      bool ok = true;
      for (EdgeId e : g.incident_edges(u)) ok = ok && is_removable[e];
      star = ok;
    }
    for (const auto& [a, bside] : {std::pair{cls.a, cls.b}, std::pair{cls.b, cls.a}}) {
      bool heavy = true;
      ForEach(a, [&](VertexId v) { heavy = heavy && g.degree(v) >= 3; });
      if (!heavy) continue;
      o.Count("applicable_sides");
      bool degree_two = false;
      ForEach(bside, [&](VertexId v) { degree_two = degree_two || g.degree(v) == 2; });
      if (pair) {
        o.Count("nonadjacent_pair");
      } else if (degree_two && star) {
        o.Count("degree_two_witness");
      } else {
        o.Count("failures");
        Json d;
        d["a_side"] = ToVector(a);
        o.Fail(g, "no nonadjacent removable pair and no degree-two witness", d);
      }
    }
  });
  return b.Finish();
}

CampaignReport DecompUnique(Resolver& r) {
  auto graphs = r.Graphs(8, 2, 8, [](int n) { return Connected(2, n, 2, 1); });
  const int seeds = r.Seeds(20);
  const unsigned long seed = r.Seed();
  Builder b("decomp-unique", r.Done(),
            {"graphs", "matching_covered", "with_tight_cut", "runs", "mismatches"});
  RunGraphs(b, graphs(), [&](const Multigraph& g, Outcome& o) {
    o.Count("graphs");
    if (!IsMatchingCovered(g)) return;
    o.Count("matching_covered");
    if (!FindNontrivialTightCut(g).has_value()) return;
    o.Count("with_tight_cut");
    const auto expected = TightCutDecomposition(g).signature();
    for (int s = 0; s < seeds; ++s) {
      std::mt19937_64 rng(seed + static_cast<unsigned long>(s));
      o.Count("runs");
      if (TightCutDecomposition(g, &rng).signature() != expected) {
        o.Count("mismatches");
        Json d;
        d["run_seed"] = seed + static_cast<unsigned long>(s);
        o.Fail(g, "random cut order changed the decomposition", d);
      }
    }
  });
  return b.Finish();
}

CampaignReport CubicVertexCount(Resolver& r) {
  auto graphs = r.Graphs(8, 4, 8, [](int n) { return Connected(4, n, 2, 3); });
  const bool all = r.AllVerdicts();
  Builder b("prop-3.13", r.Done(),
            {"graphs", "bicritical", "without_removable_edge", "failures"});
  RunGraphs(b, graphs(), [&](const Multigraph& g, Outcome& o) {
    o.Count("graphs");
    if (!IsConnected(g) || !IsBicritical(g)) return;
    o.Count("bicritical");
    if (!RemovableEdges(g).empty()) return;
    o.Count("without_removable_edge");
    int cubic = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) cubic += g.degree(v) == 3;
    Json v = Verdict(g);
    v["degree_three_vertices"] = cubic;
    if (cubic < 4) {
      o.Count("failures");
      o.Fail(g, "fewer than four vertices of degree three", v);
    }
    if (all) o.verdicts.push_back(std::move(v));
  });
  return b.Finish();
}

CampaignReport Examples(Resolver& r) {
  Json params = r.Done();
  const ClosureOptions third{10, 2, 2, true};
  params["r8_max_n"] = 8;
  params["closure_max_n"] = third.max_n;
  params["closure_leaf_mult"] = third.leaf_mult;
  params["closure_max_mult"] = third.max_mult;
  Builder b("examples", params, {});
  Outcome o;

  // Simple near-bipartite bricks without two nonadjacent removable edges,
  // other than K4 and the prism.
  const CanonicalForm k4 = Canonical(CompleteGraph(4));
  const CanonicalForm prism = Canonical(TriangularPrism());
  const std::vector<Multigraph> bricks = SimpleBricks(4, 8);
  const std::vector<char> r8_flags = ParallelMap<char>(bricks.size(), [&](std::size_t i) -> char {
    const Multigraph& g = bricks[i];
    const CanonicalForm f = Canonical(g);
    if (f == k4 || f == prism) return 0;
    return NearBipartitePair(g).has_value() && !HasTwoNonadjacentRemovableEdges(g);
  });
  Json r8 = Json::array();
  bool r8_golden = false;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    if (!r8_flags[i]) continue;
    Json v = Verdict(bricks[i]);
    v["search"] = "R8";
    v["graph6"] = EncodeGraph6(bricks[i]);
    r8_golden = r8_golden || IsIsomorphic(bricks[i], DecodeGraph6(kR8Graph6));
    o.verdicts.push_back(v);
    r8.push_back(v["graph6"]);
  }
  b.Summary("r8_candidates", static_cast<long>(r8.size()));
  if (r8.size() != 1 || !r8_golden) {
    Json d;
    d["candidates"] = r8;
    d["golden"] = kR8Graph6;
    o.Fail(DecodeGraph6(kR8Graph6), "R8 search differs from the frozen golden", d);
  }

  // Six-vertex simple bricks that are nonsolid and nonplanar.
  std::set<CanonicalForm> golden2;
  for (const char* s : kNonsolidNonplanarSixVertexBricks) {
    golden2.insert(Canonical(DecodeGraph6(s)));
  }
  std::set<CanonicalForm> found2;
  long wheel_like2 = 0;
  for (const Multigraph& g : SimpleBricks(6, 6)) {
    if (IsSolid(g) || IsPlanarSmall(g)) continue;
    found2.insert(Canonical(g));
    const bool wl = WheelLikeHubsOfBrick(g) != 0;
    wheel_like2 += wl;
    Json v = Verdict(g);
    v["search"] = "nonsolid-nonplanar-six";
    v["graph6"] = EncodeGraph6(g);
    v["wheel_like"] = wl;
    o.verdicts.push_back(v);
    if (wl) o.Fail(g, "nonsolid nonplanar six-vertex brick is wheel-like", v);
  }
  b.Summary("nonsolid_nonplanar_six", static_cast<long>(found2.size()));
  b.Summary("nonsolid_nonplanar_wheel_like", wheel_like2);
  if (found2 != golden2) {
    Json d;
    d["found"] = static_cast<long>(found2.size());
    d["golden"] = static_cast<long>(golden2.size());
    o.Fail(CompleteGraph(6), "nonsolid nonplanar six-vertex search differs from golden", d);
  }

  // Third-level closure members that are bricks but not wheel-like.
  const GClosure closure(third);
  const std::vector<ClosureEntry> empty;
  const std::vector<ClosureEntry>& level3 =
      closure.num_levels() >= 3 ? closure.level(3) : empty;
  const std::vector<char> f3 = ParallelMap<char>(level3.size(), [&](std::size_t i) -> char {
    const Multigraph& g = level3[i].graph;
    return IsBrick(g) && WheelLikeHubsOfBrick(g) == 0;
  });
  long count3 = 0;
  for (std::size_t i = 0; i < level3.size(); ++i) {
    if (!f3[i]) continue;
    if (count3++ == 0) {
      Json v = Verdict(level3[i].graph);
      v["search"] = "third-level-non-wheel-like";
      v["certificate"] = CertificateToJson(*level3[i].cert);
      o.verdicts.push_back(v);
    }
  }
  b.Summary("third_level_non_wheel_like", count3);
  if (count3 == 0 || count3 != kThirdLevelNonWheelLikeBricks) {
    Json d;
    d["found"] = count3;
    d["golden"] = kThirdLevelNonWheelLikeBricks;
    o.Fail(Wheel(5), "third-level non-wheel-like brick count differs from golden", d);
  }
  b.Merge(std::move(o));
  return b.Finish();
}

using Runner = CampaignReport (*)(Resolver&);

const std::vector<std::pair<std::string, Runner>>& Registry() {
  static const std::vector<std::pair<std::string, Runner>> registry = {
      {"matching-oracle", MatchingOracle},
      {"removable-goldens", RemovableGoldens},
      {"thm-1.1", RemovableClassCounts},
      {"thm-1.4", MinimalGraphDegrees},
      {"lemma-3.6", SixVertexWheelLike},
      {"lemma-3.9", OddWheelSplices},
      {"thm-1.3", ClosureCertificates},
      {"lemma-2.16", BipartiteCertificates},
      {"lemma-2.17", BipartitePSets},
      {"lemma-2.18", BipartiteDegreeTwo},
      {"decomp-unique", DecompUnique},
      {"prop-3.13", CubicVertexCount},
      {"examples", Examples},
  };
  return registry;
}

}  // namespace

const std::vector<std::string>& CampaignNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : Registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CampaignReport RunCampaign(const std::string& name, const CampaignParams& params,
                           const Ceilings& ceilings) {
  const auto& reg = Registry();
  auto it = std::find_if(reg.begin(), reg.end(),
                         [&](const auto& entry) { return entry.first == name; });
  if (it == reg.end()) {
    throw Error(ErrorCode::kUnknownCampaign, "unknown campaign \"" + name + "\"");
  }
  const auto start = Clock::now();
  Resolver resolver(name, params, ceilings);
  CampaignReport report = it->second(resolver);
  report.wall_clock_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace mcg
