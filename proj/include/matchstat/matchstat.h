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

#ifndef MATCHSTAT_MATCHSTAT_H_
#define MATCHSTAT_MATCHSTAT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MS_API __declspec(dllexport)
#elif defined(MATCHSTAT_BUILDING_LIBRARY)
#define MS_API __attribute__((visibility("default")))
#else
#define MS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ms_status {
  MS_OK = 0,
  MS_ERR_INVALID = 2,   /* bad argument or config */
  MS_ERR_CAP = 3,       /* enumeration or size cap exceeded */
  MS_ERR_IO = 4,        /* file could not be read or written */
  MS_ERR_INTERNAL = 5,
} ms_status;

typedef struct ms_report ms_report;
typedef struct ms_graph ms_graph;

MS_API const char* ms_version(void);

/* Message of the last failing call on this thread; never NULL. */
MS_API const char* ms_last_error(void);

/* Runs a subcommand with a JSON config object. On success *out owns a report
   that must be released with ms_report_free. */
MS_API ms_status ms_run(const char* command, const char* config_json, ms_report** out);

/* Renderings of a report; the strings live as long as the report. */
MS_API const char* ms_report_json(const ms_report* report);
MS_API const char* ms_report_csv(const ms_report* report);
MS_API const char* ms_report_plot_data(const ms_report* report);
/* Graph text for "sample"; empty for other commands. */
MS_API const char* ms_report_graph(const ms_report* report);
MS_API void ms_report_free(ms_report* report);

/* Space-separated list of subcommand names. */
MS_API const char* ms_commands(void);

MS_API ms_status ms_graph_read(const char* path, ms_graph** out);
MS_API ms_status ms_graph_parse(const char* text, ms_graph** out);
MS_API ms_status ms_graph_sample_gnp(int n, double p, uint64_t seed, uint64_t stream, ms_graph** out);
MS_API ms_status ms_graph_sample_gnm(int n, uint64_t m, uint64_t seed, uint64_t stream, ms_graph** out);
MS_API int ms_graph_vertices(const ms_graph* g);
MS_API uint64_t ms_graph_edges(const ms_graph* g);
/* Caller frees *text with ms_string_free. */
MS_API ms_status ms_graph_format(const ms_graph* g, char** text);
/* m_l as a decimal string (memo kernel); caller frees with ms_string_free. */
MS_API ms_status ms_graph_count(const ms_graph* g, int l, char** decimal);
MS_API void ms_graph_free(ms_graph* g);

MS_API void ms_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MATCHSTAT_MATCHSTAT_H_ */
