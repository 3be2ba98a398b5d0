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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "matchstat/errors.hpp"
#include "matchstat/graph.hpp"
#include "matchstat/stats.hpp"

using namespace matchstat;

namespace {

double Phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Sup distance between the empirical CDF and Phi, checked on both sides of
// each jump.
double NaiveKs(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double m = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::size_t below = 0, upto = 0;
    for (double y : xs) {
      below += y < xs[i];
      upto += y <= xs[i];
    }
    d = std::max({d, std::abs(upto / m - Phi(xs[i])), std::abs(below / m - Phi(xs[i]))});
  }
  return d;
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("normal cdf and quantile") {
  CHECK(NormalCdf(0.0) == doctest::Approx(0.5));
  CHECK(NormalCdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(NormalCdf(-8.0) > 0.0);
  for (double q : {0.001, 0.1, 0.5, 0.77, 0.999}) CHECK(NormalCdf(NormalQuantile(q)) == doctest::Approx(q).epsilon(1e-12));
}

TEST_CASE("kolmogorov survival") {
  CHECK(KolmogorovSurvival(0.0) == doctest::Approx(1.0));
  CHECK(KolmogorovSurvival(1.3580986393225505) == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(KolmogorovSurvival(1.6276236115189502) == doctest::Approx(0.01).epsilon(1e-6));
  // Both branches agree near the switch point.
  CHECK(KolmogorovSurvival(0.999999) == doctest::Approx(KolmogorovSurvival(1.000001)).epsilon(1e-5));
  double prev = 1.0;
  for (double t = 0.1; t < 3.0; t += 0.1) {
    const double s = KolmogorovSurvival(t);
    CHECK(s <= prev);
    CHECK(s >= 0.0);
    prev = s;
  }
}

TEST_CASE("ks statistic") {
  // Ideal quantiles (i + 1/2)/m sit half a step from both sides.
  std::vector<double> ideal;
  const int m = 200;
  for (int i = 0; i < m; ++i) ideal.push_back(NormalQuantile((i + 0.5) / m));
  CHECK(KsVsNormal(ideal).statistic == doctest::Approx(0.5 / m).epsilon(1e-9));
  CHECK(KsVsNormal(std::vector<double>(50, 0.0)).statistic == doctest::Approx(0.5));

  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal;
  std::vector<double> draws;
  for (int i = 0; i < 2000; ++i) draws.push_back(normal(gen));
  const KSResult r = KsVsNormal(draws);
  CHECK(r.statistic < 0.05);
  CHECK(r.sample_size == 2000);
  CHECK(r.p_value > 0.001);
  CHECK(r.statistic == doctest::Approx(NaiveKs(draws)).epsilon(1e-12));

  std::vector<double> shifted;
  for (double x : draws) shifted.push_back(x + 1.0);
  CHECK(KsVsNormal(shifted).p_value < 1e-10);

  CHECK_THROWS_AS(KsVsNormal(std::vector<double>(19, 0.0)), InvalidArgument);
  // Order does not matter.
  std::vector<double> reversed(draws.rbegin(), draws.rend());
  CHECK(KsVsNormal(reversed).statistic == r.statistic);
}

TEST_CASE("moments of samples") {
  const std::vector<double> xs{1, 2, 3, 4, 10};
  CHECK(Mean(xs) == doctest::Approx(4.0));
  CHECK(SampleVariance(xs) == doctest::Approx(12.5));
  // G1 = sqrt(n(n-1))/(n-2) * m3 / m2^(3/2), population central moments.
  const double m2 = 50.0 / 5, m3 = (-27 - 8 - 1 + 0 + 216) / 5.0;
  CHECK(Skewness(xs) == doctest::Approx(std::sqrt(20.0) / 3.0 * m3 / std::pow(m2, 1.5)));
  CHECK(Skewness({1, 2, 3}) == doctest::Approx(0.0));
  CHECK(Skewness({5, 5, 5, 5}) == 0.0);
  CHECK(Skewness({1, 2}) == 0.0);
  std::vector<double> mirrored;
  for (double x : xs) mirrored.push_back(-x);
  CHECK(Skewness(mirrored) == doctest::Approx(-Skewness(xs)));
}

}  // TEST_SUITE
