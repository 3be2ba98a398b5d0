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

#include "matchstat/matchstat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "matchstat/errors.hpp"
#include "matchstat/graph.hpp"
#include "matchstat/match_count.hpp"
#include "matchstat/report.hpp"

struct ms_report {
  std::string json;
  std::string csv;
  std::string plot;
  std::string graph;
};

struct ms_graph {
  matchstat::Graph g;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
ms_status Guard(Fn fn) {
  try {
    fn();
    last_error.clear();
    return MS_OK;
  } catch (const matchstat::CapExceeded& e) {
    last_error = e.what();
    return MS_ERR_CAP;
  } catch (const matchstat::IoError& e) {
    last_error = e.what();
    return MS_ERR_IO;
  } catch (const matchstat::InvalidArgument& e) {
    last_error = e.what();
    return MS_ERR_INVALID;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("bad config: ") + e.what();
    return MS_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MS_ERR_INTERNAL;
  }
}

ms_status NullArgument(const char* name) {
  last_error = std::string(name) + " must not be NULL";
  return MS_ERR_INVALID;
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ms_version(void) { return MATCHSTAT_VERSION; }

const char* ms_last_error(void) { return last_error.c_str(); }

ms_status ms_run(const char* command, const char* config_json, ms_report** out) {
  if (command == nullptr) return NullArgument("command");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    const nlohmann::json config =
        config_json == nullptr || *config_json == '\0' ? nlohmann::json::object()
                                                       : nlohmann::json::parse(config_json);
    const matchstat::Report r = matchstat::RunCommand(command, config);
    auto* report = new ms_report;
    report->json = matchstat::RenderJson(r);
    report->csv = matchstat::RenderCsv(r);
    report->plot = matchstat::RenderPlotData(r);
    report->graph = r.graph_text;
    *out = report;
  });
}

const char* ms_report_json(const ms_report* r) { return r ? r->json.c_str() : ""; }
const char* ms_report_csv(const ms_report* r) { return r ? r->csv.c_str() : ""; }
const char* ms_report_plot_data(const ms_report* r) { return r ? r->plot.c_str() : ""; }
const char* ms_report_graph(const ms_report* r) { return r ? r->graph.c_str() : ""; }
void ms_report_free(ms_report* r) { delete r; }

const char* ms_commands(void) {
  static const std::string names = [] {
    std::string s;
    for (const std::string& n : matchstat::CommandNames()) s += (s.empty() ? "" : " ") + n;
    return s;
  }();
  return names.c_str();
}

ms_status ms_graph_read(const char* path, ms_graph** out) {
  if (path == nullptr) return NullArgument("path");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] { *out = new ms_graph{matchstat::ReadGraphFile(path)}; });
}

ms_status ms_graph_parse(const char* text, ms_graph** out) {
  if (text == nullptr) return NullArgument("text");
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] { *out = new ms_graph{matchstat::ParseGraph(text)}; });
}

ms_status ms_graph_sample_gnp(int n, double p, uint64_t seed, uint64_t stream, ms_graph** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    matchstat::Require(n >= 1, "n must be positive");
    matchstat::Require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    *out = new ms_graph{matchstat::SampleGnp(n, p, {seed, stream})};
  });
}

ms_status ms_graph_sample_gnm(int n, uint64_t m, uint64_t seed, uint64_t stream, ms_graph** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  return Guard([&] {
    matchstat::Require(n >= 1, "n must be positive");
    matchstat::Require(m <= matchstat::EdgeSlots(n), "m must satisfy m <= C(n,2)");
    *out = new ms_graph{matchstat::SampleGnm(n, static_cast<std::size_t>(m), {seed, stream})};
  });
}

int ms_graph_vertices(const ms_graph* g) { return g ? g->g.n() : 0; }
uint64_t ms_graph_edges(const ms_graph* g) { return g ? g->g.edge_count() : 0; }

ms_status ms_graph_format(const ms_graph* g, char** text) {
  if (g == nullptr) return NullArgument("graph");
  if (text == nullptr) return NullArgument("text");
  *text = nullptr;
  return Guard([&] { *text = Duplicate(matchstat::FormatGraph(g->g)); });
}

ms_status ms_graph_count(const ms_graph* g, int l, char** decimal) {
  if (g == nullptr) return NullArgument("graph");
  if (decimal == nullptr) return NullArgument("decimal");
  *decimal = nullptr;
  return Guard([&] {
    matchstat::Require(l >= 0, "l must be non-negative");
    const matchstat::CountVector cv = matchstat::CountMatchings(g->g);
    *decimal = Duplicate(cv[static_cast<std::size_t>(l)].str());
  });
}

void ms_graph_free(ms_graph* g) { delete g; }

void ms_string_free(char* s) { std::free(s); }

}  // extern "C"
