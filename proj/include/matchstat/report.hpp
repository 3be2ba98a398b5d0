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

#ifndef MATCHSTAT_REPORT_HPP_
#define MATCHSTAT_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace matchstat {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

// Everything one subcommand produces. The document carries the resolved
// config and the meta block; nothing in it depends on timing or threads.
struct Report {
  std::string command;
  nlohmann::json document;
  Table table;
  std::vector<PlotSeries> plots;
  std::string graph_text;  // only for "sample"
};

std::vector<std::string> CommandNames();

// Validates config against the command's fields (unknown keys are errors),
// fills defaults and runs the command. "threads" is accepted by every
// command and kept out of the embedded config.
Report RunCommand(const std::string& command, const nlohmann::json& config);

std::string RenderJson(const Report& r);
// Comment lines starting with "# ", then the header row, then data rows.
std::string RenderCsv(const Report& r);
std::string RenderPlotData(const Report& r);

// 12 significant digits; non-finite values become "inf", "-inf" or "nan".
std::string FormatReal(double x);
nlohmann::json RealJson(double x);

}  // namespace matchstat

#endif  // MATCHSTAT_REPORT_HPP_
