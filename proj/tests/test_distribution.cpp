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

#include <cmath>

#include "matchstat/distribution.hpp"
#include "matchstat/errors.hpp"
#include "matchstat/formulas.hpp"
#include "matchstat/pair_census.hpp"
#include "oracles.hpp"

using namespace matchstat;

TEST_SUITE("distribution") {

TEST_CASE("exact law small cases") {
  // n = 3, l = 1: X is the edge count, Binomial(3, p).
  const Rational p(1, 3);
  const ExactDistribution d(3, 1, p);
  for (uint64_t x = 0; x <= 3; ++x) {
    const Rational expected = Rational(oracle::Choose(3, static_cast<int>(x))) * oracle::RatPow(p, x) *
                              oracle::RatPow(1 - p, 3 - x);
    CHECK(d.pmf().at(x) == expected);
  }
  const ExactDistribution full(4, 2, Rational(1));
  CHECK(full.pmf().size() == 1);
  CHECK(full.pmf().begin()->first == 3);
  const ExactDistribution empty(4, 2, Rational(0));
  CHECK(empty.pmf().at(0) == 1);
  CHECK_THROWS_AS(ExactDistribution(8, 2, p), InvalidArgument);
}

TEST_CASE("exact law agrees with the brute-force oracle") {
  for (int n = 2; n <= 6; ++n) {
    for (int l = 1; 2 * l <= n && l <= 3; ++l) {
      for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        const ExactDistribution d(n, l, p, 3);
        CHECK(d.TotalProbability() == 1);
        CHECK(d.Mean() == LambdaExact(n, l, p));
        if (n <= 5) {
          const auto law = oracle::BruteLaw(n, l, p);
          REQUIRE(law.size() == d.pmf().size());
          for (const auto& [x, pr] : law) CHECK(d.pmf().at(x) == pr);
        }
      }
    }
  }
}

TEST_CASE("exact central moments equal tuple sums") {
  for (int n = 2; n <= 5; ++n)
    for (int l = 1; 2 * l <= n; ++l)
      for (int k = 2; k <= 3; ++k)
        CHECK(ExactCentralMoment(n, l, Rational(2, 5), k) == CentralMomentTupleSum(n, l, Rational(2, 5), k));
  CHECK(ExactCentralMoment(7, 2, Rational(1, 2), 2) == VarianceFromF(7, 2, Rational(1, 2)));
}

TEST_CASE("G(n, m) mean equals mu") {
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      const int64_t N = n * (n - 1) / 2;
      const ExactDistribution d(n, l, Rational(1, 2));
      for (int64_t m = 0; m < l; ++m) CHECK(d.GnmMean(m) == 0);
      for (int64_t m = l; m <= N; ++m) {
        CHECK(d.GnmMean(m) == MuNExact(N, m, MatchingsComplete(n, l), l));
      }
    }
  }
  CHECK(ExactGnmMean(5, 2, 4) == MuNExact(10, 4, 15, 2));
}

TEST_CASE("backend selection") {
  const BackendPolicy policy;
  CHECK(ResolveBackend(100, 2, Backend::kAuto, policy) == Backend::kSparse);
  CHECK(ResolveBackend(20, 3, Backend::kAuto, policy) == Backend::kPolynomial);
  CHECK(ResolveBackend(40, 3, Backend::kAuto, policy) == Backend::kSparse);
  CHECK_THROWS_AS(ResolveBackend(40, 6, Backend::kAuto, policy), CapExceeded);
  CHECK_THROWS_AS(ResolveBackend(40, 3, Backend::kPolynomial, policy), CapExceeded);
  BackendPolicy narrow;
  narrow.polynomial_max_n = 10;
  CHECK(ResolveBackend(20, 3, Backend::kAuto, narrow) == Backend::kSparse);
  CHECK_THROWS_AS(ParseBackend("fast"), InvalidArgument);
  CHECK(ParseModel("gnm") == Model::kGnm);
}

TEST_CASE("Monte Carlo sampling") {
  McConfig c;
  c.n = 100;
  c.l = 1;
  c.p = 0.1;
  c.trials = 200;
  c.seed = 11;
  const SampleSet s = McSample(c);
  std::vector<double> xs;
  for (const BigInt& x : s.counts) xs.push_back(static_cast<double>(x));
  const double mean = 4950 * 0.1;
  const double se = std::sqrt(4950 * 0.1 * 0.9 / 200);
  CHECK(std::abs(Mean(xs) - mean) < 5 * se);

  c.trials = 0;
  CHECK(McSample(c).counts.empty());

  // Thread count does not change the draws.
  McConfig t;
  t.n = 20;
  t.l = 3;
  t.p = 0.3;
  t.trials = 64;
  t.seed = 5;
  const SampleSet one = McSample(t);
  t.threads = 4;
  const SampleSet four = McSample(t);
  CHECK(one.counts == four.counts);
  t.backend = Backend::kSparse;
  CHECK(McSample(t).counts == one.counts);
  t.seed = 6;
  CHECK(McSample(t).counts != one.counts);

  McConfig bad = t;
  bad.p = 1.5;
  CHECK_THROWS_AS(McSample(bad), InvalidArgument);
}

TEST_CASE("G(n, m) mean ratio") {
  McConfig c;
  c.model = Model::kGnm;
  c.n = 30;
  c.l = 1;
  c.m = 50;
  c.trials = 20;
  MeanRatio r = GnmMeanRatio(McSample(c));
  CHECK(r.mean == doctest::Approx(1.0));
  CHECK(r.std_error == doctest::Approx(0.0));
  c.l = 2;
  c.trials = 400;
  r = GnmMeanRatio(McSample(c));
  CHECK(std::abs(r.z) < 5.0);
}

TEST_CASE("moment reports") {
  MomentConfig c;
  c.n = 6;
  c.l = 2;
  c.p = "1/2";
  c.k_max = 4;
  MomentReport r = BuildMomentReport(c);
  REQUIRE(r.rows.size() == 3);
  CHECK(*r.rows[0].measured_exact == ExactCentralMoment(6, 2, Rational(1, 2), 2));
  CHECK(r.rows[0].ratio ==
        doctest::Approx(ToDouble(VarianceFromF(6, 2, Rational(1, 2)) / SigmaBarSquaredExact(6, 2, Rational(1, 2)))));
  c.n = 10;
  c.k_max = 2;
  r = BuildMomentReport(c);
  CHECK(*r.rows[0].measured_exact == VarianceFromF(10, 2, Rational(1, 2)));
  c.k_max = 3;
  CHECK_THROWS_AS(BuildMomentReport(c), CapExceeded);

  c.source = MomentSource::kMonteCarlo;
  c.n = 30;
  c.k_max = 4;
  c.trials = 300;
  c.seed = 3;
  r = BuildMomentReport(c);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].std_error.has_value());
  CHECK(r.rows[0].ratio > 0.5);
  CHECK(r.rows[0].ratio < 1.5);
}

TEST_CASE("limit law guards") {
  LimitLawConfig c;
  c.mc.n = 20;
  c.mc.l = 2;
  c.mc.p = 0.999;
  c.mc.trials = 50;
  CHECK_THROWS_AS(LimitLawExperiment(c), InvalidArgument);
  c.mc.p = 0.5;
  c.mc.trials = 10;
  CHECK_THROWS_AS(LimitLawExperiment(c), InvalidArgument);
  c.mc.trials = 50;
  const LimitLawResult r = LimitLawExperiment(c);
  CHECK(r.excluded == 0);
  CHECK(r.normal.sample_size == 50);
  REQUIRE(r.lognormal.has_value());
  c.mc.model = Model::kGnm;
  CHECK_THROWS_AS(LimitLawExperiment(c), InvalidArgument);
}

TEST_CASE("transition scan") {
  ScanConfig c;
  c.n = 16;
  c.p = 0.5;
  c.l_min = 1;
  c.l_max = 3;
  c.trials = 40;
  c.seed = 9;
  const auto rows = TransitionScan(c);
  REQUIRE(rows.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(rows[j].l == j + 1);
  c.threads = 3;
  const auto again = TransitionScan(c);
  for (int j = 0; j < 3; ++j) CHECK(again[j].normal.statistic == rows[j].normal.statistic);
  c.l_max = 9;
  CHECK_THROWS_AS(TransitionScan(c), InvalidArgument);
}

}  // TEST_SUITE
