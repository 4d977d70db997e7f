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

// Acceptance run: one pass/fail line per criterion, each with a time budget.
// Usage: acceptance [--reports DIR] [--only N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "mcgraph/campaigns.hpp"
#include "mcgraph/error.hpp"

namespace {

using mcg::CampaignParams;
using mcg::CampaignReport;
using mcg::Json;

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  // Returns the detail text; sets ok to the verdict.
  std::function<std::string(bool& ok)> run;
};

std::string reports_dir;

CampaignReport Run(const std::string& campaign, const CampaignParams& p,
                   const std::string& tag) {
  CampaignReport r = mcg::RunCampaign(campaign, p);
  if (!reports_dir.empty()) {
    std::ofstream(reports_dir + "/" + tag + ".json") << r.ToJson().dump(2) << "\n";
  }
  return r;
}

long Get(const CampaignReport& r, const char* key) {
  return r.summary.at(key).get<long>();
}

std::string Counts(const CampaignReport& r, std::initializer_list<const char*> keys) {
  std::string out;
  for (const char* k : keys) {
    if (!out.empty()) out += ", ";
    out += std::string(k) + "=" + std::to_string(Get(r, k));
  }
  return out;
}

std::vector<Criterion> Criteria() {
  return {
      {1, "matching oracle equivalence", 120,
       [](bool& ok) {
         const CampaignReport r = Run("matching-oracle", {}, "c01_matching_oracle");
         ok = r.passed() && Get(r, "sampled_graphs") == 7 * 10000;
         return Counts(r, {"exhaustive_graphs", "sampled_graphs", "mismatches"});
       }},
      {2, "removable-class golden facts", 1,
       [](bool& ok) {
         const CampaignReport r = Run("removable-goldens", {}, "c02_removable_goldens");
         ok = r.passed() && Get(r, "graphs") == 4;
         return Counts(r, {"graphs", "mismatches"});
       }},
      {3, "removable classes at least max degree (simple bricks n<=8)", 600,
       [](bool& ok) {
         const CampaignReport r = Run("thm-1.1", {}, "c03_thm_1_1");
         ok = r.passed() && Get(r, "excluded_from_edge_count") == 2;
         return Counts(r, {"bricks", "class_failures", "edge_count_failures",
                           "excluded_from_edge_count"}) +
                " (K4 and prism excluded from the edge count)";
       }},
      {4, "minimal matching covered graphs have min degree 2 or 3", 600,
       [](bool& ok) {
         const CampaignReport r = Run("thm-1.4", {}, "c04_thm_1_4");
         ok = r.passed() && Get(r, "minimal") > 0 && Get(r, "multigraphs") > 0;
         return Counts(r, {"graphs", "multigraphs", "minimal", "failures",
                           "min_degree_4"});
       }},
      {5, "six-vertex wheel-like classification", 180,
       [](bool& ok) {
         const CampaignReport r = Run("lemma-3.6", {}, "c05_lemma_3_6");
         ok = r.passed() && Get(r, "wheel_like") > 0;
         return Counts(r, {"bricks", "wheel_like", "mismatches"});
       }},
      {6, "odd wheel splice equivalence (hub multiplicity <= 2)", 600,
       [](bool& ok) {
         const CampaignReport r = Run("lemma-3.9", {}, "c06_lemma_3_9");
         CampaignParams supp;
         supp.mult_bound = 3;
         supp.exclude_hub_pairs = true;
         const auto start = std::chrono::steady_clock::now();
         const CampaignReport s = Run("lemma-3.9", supp, "c06_lemma_3_9_mult3");
         const double supp_seconds =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         ok = r.passed() && s.passed() && Get(s, "wheel_like") > 0 && supp_seconds <= 600;
         char extra[96];
         std::snprintf(extra, sizeof extra, " %.1fs", supp_seconds);
         return Counts(r, {"splices", "bricks", "wheel_like", "mismatches"}) +
                "; multiplicity <= 3 without hub pairs: " +
                Counts(s, {"splices", "bricks", "wheel_like", "mismatches"}) + extra;
       }},
      {7, "wheel-like bricks have closure certificates", 300,
       [](bool& ok) {
         const CampaignReport r = Run("thm-1.3", {}, "c07_thm_1_3");
         ok = r.passed() && Get(r, "wheel_like") == Get(r, "certified") &&
              Get(r, "wheel_like") > 0;
         return Counts(r, {"closure_members", "wheel_like", "certified", "failures"});
       }},
      {8, "bipartite non-removability certificates", 300,
       [](bool& ok) {
         const CampaignReport r = Run("lemma-2.16", {}, "c08_lemma_2_16");
         ok = r.passed();
         return Counts(r, {"bipartite_matching_covered", "edges", "non_removable",
                           "mismatches"});
       }},
      {9, "tight cut decomposition uniqueness (20 seeds)", 300,
       [](bool& ok) {
         const CampaignReport r = Run("decomp-unique", {}, "c09_decomp_unique");
         ok = r.passed() && Get(r, "runs") == 20 * Get(r, "with_tight_cut");
         return Counts(r, {"with_tight_cut", "runs", "mismatches"});
       }},
      {10, "bicritical graphs without removable edges have four cubic vertices", 300,
       [](bool& ok) {
         const CampaignReport r = Run("prop-3.13", {}, "c10_prop_3_13");
         ok = r.passed() && Get(r, "without_removable_edge") > 0;
         return Counts(r, {"bicritical", "without_removable_edge", "failures"});
       }},
      {11, "named example reconstructions", 600,
       [](bool& ok) {
         const CampaignReport r = Run("examples", {}, "c11_examples");
         ok = r.passed() && Get(r, "r8_candidates") == 1 &&
              Get(r, "nonsolid_nonplanar_six") > 0 && Get(r, "nonsolid_nonplanar_wheel_like") == 0 &&
              Get(r, "third_level_non_wheel_like") > 0;
         return Counts(r, {"r8_candidates", "nonsolid_nonplanar_six", "nonsolid_nonplanar_wheel_like",
                           "third_level_non_wheel_like"});
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--reports" && i + 1 < argc) {
      reports_dir = argv[++i];
      std::filesystem::create_directories(reports_dir);
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--reports DIR] [--only N]\n");
      return 2;
    }
  }
  int failed = 0;
  for (const Criterion& c : Criteria()) {
    if (only != 0 && c.id != only) continue;
    bool ok = false;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = c.run(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("error: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    ok = ok && in_budget;
    failed += !ok;
    std::printf("criterion %2d %s  %s: %s [%.2fs / budget %.0fs%s]\n", c.id,
                ok ? "PASS" : "FAIL", c.name, detail.c_str(), seconds, c.budget_seconds,
                in_budget ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
