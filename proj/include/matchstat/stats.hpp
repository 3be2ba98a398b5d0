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

#ifndef MATCHSTAT_STATS_HPP_
#define MATCHSTAT_STATS_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace matchstat {

double NormalCdf(double x);
double NormalQuantile(double q);

struct KSResult {
  double statistic = 0.0;  // D
  std::size_t sample_size = 0;
  double p_value = 1.0;    // asymptotic Kolmogorov
  std::string reference = "standard-normal";
};

inline constexpr std::size_t kMinKsSamples = 20;

// One-sample KS test against the standard normal. D is evaluated at the
// sample points: max_i max(i/m - Phi(x_(i)), Phi(x_(i)) - (i-1)/m).
KSResult KsVsNormal(std::vector<double> samples);

// P(K > t) for the Kolmogorov distribution, series terms dropped once they
// fall below 1e-12.
double KolmogorovSurvival(double t);

double Mean(const std::vector<double>& xs);
// Unbiased sample variance.
double SampleVariance(const std::vector<double>& xs);
// Adjusted Fisher-Pearson skewness G1; needs at least 3 samples and a
// non-degenerate sample, otherwise 0.
double Skewness(const std::vector<double>& xs);

}  // namespace matchstat

#endif  // MATCHSTAT_STATS_HPP_
