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

#include "matchstat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/normal.hpp>

#include "matchstat/errors.hpp"

namespace matchstat {

double NormalCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double NormalQuantile(double q) {
  Require(q > 0.0 && q < 1.0, "normal quantile needs 0 < q < 1");
  return boost::math::quantile(boost::math::normal_distribution<double>(), q);
}

double KolmogorovSurvival(double t) {
  if (t <= 0.0) return 1.0;
  // Small t: the alternating series converges slowly; use the Jacobi form.
  if (t < 1.0) {
    const double c = std::sqrt(2.0 * std::numbers::pi) / t;
    const double a = std::numbers::pi * std::numbers::pi / (8.0 * t * t);
    double cdf = 0.0;
    for (int j = 1;; j += 2) {
      const double term = std::exp(-a * j * j);
      cdf += term;
      if (term < 1e-12) break;
    }
    return std::clamp(1.0 - c * cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int j = 1;; ++j) {
    const double term = std::exp(-2.0 * j * j * t * t);
    sum += (j % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

KSResult KsVsNormal(std::vector<double> samples) {
  Require(samples.size() >= kMinKsSamples, "the KS test needs at least 20 samples");
  for (double x : samples) Require(!std::isnan(x), "the KS test got a NaN sample");
  std::sort(samples.begin(), samples.end());
  const double m = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double phi = NormalCdf(samples[i]);
    d = std::max({d, (i + 1) / m - phi, phi - i / m});
  }
  KSResult r;
  r.statistic = d;
  r.sample_size = samples.size();
  r.p_value = KolmogorovSurvival(std::sqrt(m) * d);
  return r;
}

double Mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double SampleVariance(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = Mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - mu) * (x - mu);
  return s / static_cast<double>(xs.size() - 1);
}

double Skewness(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  if (n < 3) return 0.0;
  const double mu = Mean(xs);
  double m2 = 0.0, m3 = 0.0;
  for (double x : xs) {
    const double d = x - mu;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  if (m2 <= 0.0) return 0.0;
  const double g1 = m3 / std::pow(m2, 1.5);
  const double nd = static_cast<double>(n);
  return g1 * std::sqrt(nd * (nd - 1.0)) / (nd - 2.0);
}

}  // namespace matchstat
