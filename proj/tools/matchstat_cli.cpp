// Copyright 2026 The matchstat Authors.
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

// Command-line front end. Everything goes through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchstat/matchstat.h"

namespace {

enum Exit { kOk = 0, kInvalid = 2, kCap = 3, kIo = 4, kInternal = 5 };

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

const FlagSpec kN{"--n", "n", "vertex count"};
const FlagSpec kL{"--l", "l", "matching size"};
const FlagSpec kP{"--p", "p", "edge probability (decimal or a/b)"};
const FlagSpec kM{"--m", "m", "edge count for G(n, m)"};
const FlagSpec kK{"--k", "k", "tuple length"};
const FlagSpec kTrials{"--trials", "trials", "Monte Carlo trials"};
const FlagSpec kSeed{"--seed", "seed", "master seed"};
const FlagSpec kC{"--c", "c", "regime constant"};
const FlagSpec kTol{"--tol", "tol", "regime tolerance"};
const FlagSpec kModel{"--model", "model", "gnp or gnm"};
const FlagSpec kEnumCap{"--enumeration-cap", "enumeration_cap", "matchings enumeration cap"};
const FlagSpec kPairCap{"--pair-cap", "pair_cap", "ordered pair cap"};
const FlagSpec kBackend{"--backend", "backend", "auto, sparse or polynomial"};
const FlagSpec kPolyN{"--polynomial-max-n", "polynomial_max_n", "largest n for the polynomial kernel"};
const FlagSpec kSparseL{"--sparse-max-l", "sparse_max_l", "largest l for the sparse kernel"};

const std::map<std::string, std::pair<std::string, std::vector<FlagSpec>>>& Commands() {
  static const std::map<std::string, std::pair<std::string, std::vector<FlagSpec>>> commands = {
      {"count",
       {"count k-matchings of a graph file",
        {{"--graph", "graph", "graph file"},
         {"--kernel", "kernel", "memo or sparse"},
         {"--vertex-cap", "vertex_cap", "largest n for the memo kernel"},
         kL}}},
      {"formulas",
       {"closed forms: lambda, sigma-bar, beta, mu, z(i)",
        {kN, kL, kP, kM, kC, kTol, {"--delta", "delta", "fraction delta of l"}}}},
      {"pairs",
       {"pair census f(i, n2)",
        {kN, kL, {"--method", "method", "double-loop or orbit"}, kEnumCap, kPairCap}}},
      {"tuples",
       {"K / K' tuple counts and central-moment tuple sums",
        {kN, kL, kK, kP, {"--moment", "moment", "true or false"},
         {"--degree-census", "degree_census", "true or false"},
         {"--tuple-cap", "tuple_cap", "tuple budget"}, kEnumCap}}},
      {"verify-switching",
       {"double-count the switchings",
        {kN, kL, {"--transition", "transition", "i:<i>-<i-1>, n2:<i>:<a>-<a-1> or all"},
         {"--check-closure", "check_closure", "true or false"}, kEnumCap, kPairCap}}},
      {"mc-dist",
       {"Monte Carlo distribution and KS tests",
        {kModel, kN, kL, kP, kM, kTrials, kSeed, kC, kTol,
         {"--strict-zero-exclusion", "strict_zero_exclusion", "true or false"}, kBackend, kPolyN,
         kSparseL}}},
      {"moments",
       {"central moments against (k-1)!! sigma-bar^k",
        {kN, kL, kP, {"--k-max", "k_max", "largest moment order"},
         {"--source", "source", "exact or mc"}, kTrials, kSeed, kBackend, kPolyN, kSparseL}}},
      {"transition-scan",
       {"scan l across the normal / log-normal transition",
        {kN, kP, {"--l-min", "l_min", "first l"}, {"--l-max", "l_max", "last l"}, kTrials, kSeed, kC,
         kTol, kBackend, kPolyN, kSparseL}}},
      {"exact-dist",
       {"exact law by enumerating every graph (n <= 7)", {kN, kL, kP, kM}}},
      {"sample",
       {"draw one random graph",
        {kModel, kN, kP, kM, kSeed, {"--stream", "stream", "stream index"}}}},
  };
  return commands;
}

bool WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo tools for counting l-matchings in random graphs"};
  app.set_version_flag("--version", std::string(ms_version()));
  app.require_subcommand(1);

  std::string config_path, out_path, plot_path, format = "json";
  int threads = 1;
  app.add_option("--config", config_path, "JSON config file; flags override it");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "json, csv or graph (sample only)")
      ->check(CLI::IsMember({"json", "csv", "graph"}));
  app.add_option("--plot-data", plot_path, "write (x, y) series to this file");
  app.add_option("--threads", threads, "worker threads; results do not depend on it")
      ->check(CLI::Range(1, 1024));

  std::map<std::string, std::map<std::string, std::string>> values;
  std::string positional_graph;
  for (const auto& [name, spec] : Commands()) {
    CLI::App* sub = app.add_subcommand(name, spec.first);
    sub->fallthrough();
    for (const FlagSpec& f : spec.second) {
      sub->add_option(f.flag, values[name][f.key], f.help);
    }
    if (name == "count") sub->add_option("graph_file", positional_graph, "graph file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  nlohmann::json config = nlohmann::json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file \"" << config_path << "\"\n";
      return kIo;
    }
    try {
      config = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: config file is not valid JSON: " << e.what() << "\n";
      return kInvalid;
    }
    if (!config.is_object()) {
      std::cerr << "error: config file must hold a JSON object\n";
      return kInvalid;
    }
  }
  CLI::App* sub = app.get_subcommand(command);
  for (const FlagSpec& f : Commands().at(command).second) {
    if (sub->count(f.flag) > 0) config[f.key] = values[command][f.key];
  }
  if (command == "count" && !positional_graph.empty()) config["graph"] = positional_graph;
  if (app.count("--threads") > 0) config["threads"] = threads;
  if (format == "graph" && command != "sample") {
    std::cerr << "error: --format graph is only valid for sample\n";
    return kInvalid;
  }

  ms_report* report = nullptr;
  const ms_status status = ms_run(command.c_str(), config.dump().c_str(), &report);
  if (status != MS_OK) {
    std::cerr << "error: " << ms_last_error() << "\n";
    return status == MS_ERR_INVALID ? kInvalid
           : status == MS_ERR_CAP   ? kCap
           : status == MS_ERR_IO    ? kIo
                                    : kInternal;
  }
  const std::string body = format == "csv"     ? ms_report_csv(report)
                           : format == "graph" ? ms_report_graph(report)
                                               : ms_report_json(report);
  const std::string plot = ms_report_plot_data(report);
  ms_report_free(report);

  if (!WriteText(out_path, body)) {
    std::cerr << "error: cannot write \"" << out_path << "\"\n";
    return kIo;
  }
  if (!plot_path.empty() && !WriteText(plot_path, plot)) {
    std::cerr << "error: cannot write \"" << plot_path << "\"\n";
    return kIo;
  }
  return kOk;
}
