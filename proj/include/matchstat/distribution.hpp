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

#ifndef MATCHSTAT_DISTRIBUTION_HPP_
#define MATCHSTAT_DISTRIBUTION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchstat/formulas.hpp"
#include "matchstat/graph.hpp"
#include "matchstat/log_real.hpp"
#include "matchstat/match_count.hpp"
#include "matchstat/numeric.hpp"
#include "matchstat/stats.hpp"

namespace matchstat {

inline constexpr int kExactMaxN = 7;

// Law of X_{n,l} over all 2^N graphs on n <= 7 vertices. by_edges[x][e] is
// the number of graphs with e edges and exactly x l-matchings, which gives
// the pmf as a polynomial in p and the G(n, m) law for free.
class ExactDistribution {
 public:
  ExactDistribution(int n, int l, const Rational& p, int threads = 1);

  int n() const { return n_; }
  int l() const { return l_; }
  const Rational& p() const { return p_; }
  const std::map<uint64_t, Rational>& pmf() const { return pmf_; }
  const std::vector<std::vector<uint64_t>>& by_edges() const { return by_edges_; }

  Rational TotalProbability() const;
  Rational Mean() const;
  // E[(X - EX)^k].
  Rational CentralMoment(int k) const;
  Rational RawMoment(int k) const;
  // E X over the uniform m-edge graphs.
  Rational GnmMean(int64_t m) const;

 private:
  int n_;
  int l_;
  Rational p_;
  std::vector<std::vector<uint64_t>> by_edges_;  // [x][edge count]
  std::map<uint64_t, Rational> pmf_;
};

Rational ExactCentralMoment(int n, int l, const Rational& p, int k);
Rational ExactGnmMean(int n, int l, int64_t m);

enum class Model { kGnp, kGnm };
std::string ModelName(Model m);
Model ParseModel(const std::string& text);

enum class Backend { kAuto, kSparse, kPolynomial };
std::string BackendName(Backend b);
Backend ParseBackend(const std::string& text);

struct BackendPolicy {
  int polynomial_max_n = 28;
  int sparse_max_l = kSparseMaxL;
};

// l <= 2 goes to the sparse kernel; otherwise the polynomial kernel when
// n <= polynomial_max_n, else the sparse kernel when l <= sparse_max_l.
// Throws CapExceeded when neither applies.
Backend ResolveBackend(int n, int l, Backend requested, const BackendPolicy& policy);
BigInt CountWithBackend(const Graph& g, int l, Backend resolved, const BackendPolicy& policy);

struct McConfig {
  Model model = Model::kGnp;
  int n = 0;
  int l = 0;
  double p = 0.0;
  int64_t m = 0;
  uint64_t trials = 0;
  uint64_t seed = 0;
  // Trial t draws from SeedSpec{seed, stream_base + t}.
  uint64_t stream_base = 0;
  int threads = 1;
  Backend backend = Backend::kAuto;
  BackendPolicy policy;
};

struct SampleSet {
  McConfig config;
  Backend backend = Backend::kAuto;  // the resolved one
  std::vector<BigInt> counts;        // in trial order
  uint64_t zero_count = 0;
};

// Independent trials; the result does not depend on config.threads.
SampleSet McSample(const McConfig& config);

// Standardized linear statistic (X - lambda) / sigma-bar and the log
// statistic ln(e^{beta^2/2} X / lambda) / beta of each sample; zero counts
// are skipped by the latter.
std::vector<double> LinearStatistics(const SampleSet& s);
std::vector<double> LogStatistics(const SampleSet& s);

struct MeanRatio {
  double mean = 0.0;      // sample mean of X / mu
  double std_error = 0.0;
  double z = 0.0;         // (mean - 1) / std_error
};

// Sample mean of X / mu_n for G(n, m) samples.
MeanRatio GnmMeanRatio(const SampleSet& s);

enum class MomentSource { kExact, kMonteCarlo };
std::string MomentSourceName(MomentSource s);
MomentSource ParseMomentSource(const std::string& text);

struct MomentRow {
  int k = 0;
  LogReal measured;          // central moment
  std::optional<Rational> measured_exact;
  LogReal theoretical;       // (k-1)!! sigma-bar^k, or 0 for odd k
  double ratio = 0.0;        // measured / theoretical; |measured| / sigma-bar^k for odd k
  std::optional<double> std_error;  // of the ratio, Monte Carlo only
};

struct MomentReport {
  MomentSource source = MomentSource::kExact;
  std::vector<MomentRow> rows;
};

struct MomentConfig {
  int n = 0;
  int l = 0;
  std::string p;  // decimal or a/b, kept textual so exact sources stay exact
  int k_max = 4;
  MomentSource source = MomentSource::kExact;
  uint64_t trials = 0;
  uint64_t seed = 0;
  int threads = 1;
  BackendPolicy policy;
};

// Exact source: exhaustive for n <= 7; beyond that only k = 2, through the
// f_i identity. Monte Carlo moments are taken about lambda.
MomentReport BuildMomentReport(const MomentConfig& config);

inline constexpr double kMaxZeroFraction = 0.01;
inline constexpr double kMaxP = 0.95;

struct LimitLawResult {
  SampleSet samples;
  RegimeReport regime;
  KSResult normal;
  std::optional<KSResult> lognormal;
  uint64_t excluded = 0;
  double excluded_fraction = 0.0;
};

struct LimitLawConfig {
  McConfig mc;  // must be G(n, p)
  double c = 1.0;
  double tol = 0.1;
  // Throw when a supercritical run excludes more than 1% zero counts.
  bool strict_zero_exclusion = true;
};

LimitLawResult LimitLawExperiment(const LimitLawConfig& config);

struct ScanRow {
  int l = 0;
  RegimeReport regime;
  double skewness = 0.0;
  KSResult normal;
  std::optional<KSResult> lognormal;
  uint64_t zero_count = 0;
  std::string backend;
};

struct ScanConfig {
  int n = 0;
  double p = 0.0;
  int l_min = 1;
  int l_max = 1;
  uint64_t trials = 0;
  uint64_t seed = 0;
  int threads = 1;
  double c = 1.0;
  double tol = 0.1;
  BackendPolicy policy;
};

// Row l draws from streams (l << 40) + t.
std::vector<ScanRow> TransitionScan(const ScanConfig& config);

}  // namespace matchstat

#endif  // MATCHSTAT_DISTRIBUTION_HPP_
