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

// mcgraph command-line tool: analyze, verify and generate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcgraph/campaigns.hpp"
#include "mcgraph/canonical.hpp"
#include "mcgraph/error.hpp"
#include "mcgraph/family_g.hpp"
#include "mcgraph/graph_io.hpp"
#include "mcgraph/parallel.hpp"
#include "mcgraph/splice.hpp"

namespace {

constexpr int kDefaultClosureCeiling = 10;

using mcg::kExitPass;
using mcg::kExitUsage;

using mcg::Error;
using mcg::ErrorCode;
using mcg::Json;
using mcg::Multigraph;

std::string ReadInput(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  out << text;
}

// "K" or "K,m1,...,mK".
mcg::WheelSpec ParseWheel(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadSpec, "bad wheel spec \"" + text + "\"");
    }
  }
  if (values.empty()) throw Error(ErrorCode::kBadSpec, "empty wheel spec");
  mcg::WheelSpec w = mcg::WheelSpec::Plain(values[0]);
  if (values.size() > 1) w.mults.assign(values.begin() + 1, values.end());
  mcg::ValidateWheelSpec(w);
  return w;
}

// A splice file is either a certificate or {"g", "u", "h", "v", "theta"}
// with both operands as .mg or graph6 text.
Multigraph BuildSplice(const std::string& path) {
  Json j;
  try {
    j = Json::parse(ReadInput(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("splice file: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "splice file must hold an object");
  try {
    if (j.contains("g")) {
      auto one = [](const Json& text) {
        std::vector<Multigraph> gs = mcg::ReadGraphs(text.get<std::string>());
        if (gs.size() != 1) throw Error(ErrorCode::kBadSpec, "operand must be one graph");
        return gs[0];
      };
      return mcg::Splice(one(j.at("g")), j.at("u").get<int>(), one(j.at("h")),
                         j.at("v").get<int>(), j.at("theta").get<std::vector<int>>());
    }
    return mcg::BuildFromCertificate(mcg::CertificateFromJson(nlohmann::json::parse(j.dump())));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("splice file: ") + e.what());
  }
}

std::string FormatGraphs(const std::vector<Multigraph>& graphs, const std::string& format,
                         bool skip_nonsimple, int& skipped) {
  std::string out;
  skipped = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Multigraph& g = graphs[i];
    if (format == "graph6") {
      if (!g.is_simple() && skip_nonsimple) {
        ++skipped;
        continue;
      }
      out += mcg::EncodeGraph6(g) + "\n";
    } else {
      if (!out.empty()) out += "\n";
      out += mcg::EncodeMg(g);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching covered graph analysis and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "mg";
  std::string out_path;
  int jobs = 0;
  app.add_option("--format", format, "Graph output format")
      ->check(CLI::IsMember({"mg", "graph6"}));
  app.add_option("--out", out_path, "Write output to this file");
  app.add_option("--jobs", jobs, "Worker threads (0: hardware default)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* analyze = app.add_subcommand("analyze", "Report structural properties");
  std::string analyze_file;
  analyze->add_option("file", analyze_file, "Graph file (.mg or graph6; - for stdin)")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a verification campaign");
  std::string campaign;
  mcg::CampaignParams params;
  verify->add_option("campaign", campaign, "Campaign id")->required();
  verify->add_option("--max-n", params.max_n, "Vertex bound");
  verify->add_option("--seeds", params.seeds, "Number of random runs per graph");
  verify->add_option("--mult-bound", params.mult_bound, "Edge multiplicity bound");
  verify->add_option("--samples", params.samples, "Random samples per order");
  verify->add_option("--seed", params.seed, "Base random seed");
  verify->add_option("--wheels", params.wheels, "Odd wheel sizes for splicing (comma separated)")
      ->delimiter(',');
  verify->add_option("--corpus", params.corpus, "Graph file replacing the enumeration");
  verify->add_flag("--exclude-hub-pairs", params.exclude_hub_pairs,
                   "Skip hub-to-hub splices");
  verify->add_flag("--all-verdicts", params.all_verdicts, "Record a verdict for every graph");

  app.add_subcommand("campaigns", "List campaign ids");

  CLI::App* generate = app.add_subcommand("generate", "Emit graphs");
  std::string wheel_spec;
  std::string splice_file;
  bool closure = false;
  int closure_n = 8;
  int closure_mult = 2;
  std::optional<int> leaf_mult;
  auto* wheel_opt = generate->add_option("--wheel", wheel_spec, "K or K,m1,...,mK");
  auto* closure_opt = generate->add_flag("--g-closure", closure, "All closure members");
  auto* splice_opt = generate->add_option("--splice", splice_file, "Splice file (JSON)");
  wheel_opt->excludes(closure_opt)->excludes(splice_opt);
  closure_opt->excludes(splice_opt);
  generate->add_option("--max-n", closure_n, "Closure vertex bound")->needs(closure_opt);
  generate->add_option("--mult-bound", closure_mult, "Closure multiplicity bound")
      ->needs(closure_opt);
  generate->add_option("--leaf-mult", leaf_mult,
                       "Closure leaf spoke multiplicity (default: max(mult, max-n - 3))")
      ->needs(closure_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    mcg::SetWorkerCount(jobs);
    if (analyze->parsed()) {
      const std::vector<Multigraph> graphs = mcg::ReadGraphs(ReadInput(analyze_file));
      if (graphs.empty()) throw Error(ErrorCode::kParseError, "no graph in input");
      Json j;
      j["schema"] = mcg::kReportSchema;
      j["graphs"] = Json::array();
      for (const Multigraph& g : graphs) j["graphs"].push_back(mcg::AnalyzeGraph(g));
      WriteOutput(out_path, j.dump(2) + "\n");
      return kExitPass;
    }
    if (app.got_subcommand("campaigns")) {
      std::string text;
      for (const std::string& name : mcg::CampaignNames()) text += name + "\n";
      WriteOutput(out_path, text);
      return kExitPass;
    }
    if (verify->parsed()) {
      const mcg::CampaignReport report = mcg::RunCampaign(campaign, params);
      WriteOutput(out_path, report.ToJson().dump(2) + "\n");
      std::cerr << campaign << ": " << (report.passed() ? "pass" : "FAIL") << " ("
                << report.counterexamples.size() << " counterexamples, "
                << report.wall_clock_seconds << " s)\n";
      return mcg::ExitCode(report);
    }
    if (generate->parsed()) {
      std::vector<Multigraph> graphs;
      bool many = false;
      if (!wheel_spec.empty()) {
        graphs.push_back(mcg::MakeWheel(ParseWheel(wheel_spec)));
      } else if (closure) {
        const mcg::Ceilings ceilings = mcg::CeilingsFromEnvironment();
        const int cap = ceilings.max_n.value_or(kDefaultClosureCeiling);
        if (closure_n > cap) {
          throw Error(ErrorCode::kBoundExceeded,
                      "closure max_n above ceiling " + std::to_string(cap) +
                          " (MCGRAPH_MAX_N)");
        }
        if (closure_mult > ceilings.mult) {
          throw Error(ErrorCode::kBoundExceeded,
                      "closure multiplicity above ceiling " +
                          std::to_string(ceilings.mult) + " (MCGRAPH_MAX_MULT)");
        }
        const int leaves = leaf_mult.value_or(std::max(closure_mult, closure_n - 3));
        if (closure_n < 4 || closure_mult < 1 || leaves < 1) {
          throw Error(ErrorCode::kBadSpec, "closure bounds must be positive");
        }
        const mcg::GClosure c(mcg::ClosureOptions{closure_n, leaves, closure_mult, true});
        for (const mcg::ClosureEntry* e : c.members()) graphs.push_back(e->graph);
        many = true;
      } else if (!splice_file.empty()) {
        graphs.push_back(BuildSplice(splice_file));
      } else {
        throw Error(ErrorCode::kBadSpec, "generate needs --wheel, --g-closure or --splice");
      }
      int skipped = 0;
      const std::string text = FormatGraphs(graphs, format, many, skipped);
      WriteOutput(out_path, text);
      if (skipped > 0) {
        std::cerr << "skipped " << skipped << " graphs with parallel edges (graph6)\n";
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mcg::ExitCode(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
