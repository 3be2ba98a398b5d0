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
#include <numbers>

#include "matchstat/errors.hpp"
#include "matchstat/formulas.hpp"
#include "matchstat/log_real.hpp"
#include "matchstat/match_count.hpp"
#include "oracles.hpp"

using namespace matchstat;

namespace {

double DoubleFact(int m) {
  double r = 1;
  for (int j = m; j > 1; j -= 2) r *= j;
  return r;
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("log-real arithmetic") {
  const LogReal a = LogReal::FromDouble(3.0), b = LogReal::FromDouble(-5.0);
  CHECK((a + b).value() == doctest::Approx(-2.0));
  CHECK((a - b).value() == doctest::Approx(8.0));
  CHECK((a * b).value() == doctest::Approx(-15.0));
  CHECK((b / a).value() == doctest::Approx(-5.0 / 3.0));
  CHECK((a - a).is_zero());
  CHECK(LogReal::FromInt(0).is_zero());
  const LogReal huge = LogReal::FromInt(boost::multiprecision::pow(BigInt(10), 500));
  CHECK(huge.log_abs() == doctest::Approx(500 * std::log(10.0)));
  CHECK(ToScientific(huge) == "1e+500");
  CHECK(ToScientific(LogReal::FromDouble(0.745356)) == "0.745356");
  CHECK(LogReal::FromRational(Rational(1, 4)).value() == doctest::Approx(0.25));
}

TEST_CASE("lambda examples and exact agreement") {
  CHECK(Lambda({4, 1, 0.5, {}}).value() == doctest::Approx(3.0));
  CHECK(Lambda({4, 2, 0.5, {}}).value() == doctest::Approx(0.75));
  for (int n = 2; n <= 20; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      const Rational p(3, 10);
      const LogReal exact = LogReal::FromRational(oracle::Rat(oracle::CompleteMatchings(n, l)) * oracle::RatPow(p, l));
      CHECK(LogReal::RelativeDifference(Lambda({n, l, 0.3, {}}), exact) < 1e-9);
    }
  }
}

TEST_CASE("sigma-bar") {
  CHECK(SigmaBar({4, 1, 0.5, {}}).pow(2).value() == doctest::Approx(1.5));
  const double expected = std::sqrt(2.0 * 15 * 6 * 3 * 1 * (std::pow(0.5, 3) - std::pow(0.5, 4)));
  CHECK(SigmaBar({6, 2, 0.5, {}}).value() == doctest::Approx(expected).epsilon(1e-12));
  for (int n = 2; n <= 20; ++n) {
    // l = 1 collapses to the binomial variance N p (1 - p)
    CHECK(SigmaBarSquaredExact(n, 1, Rational(1, 3)) == Rational(n * (n - 1) / 2) * Rational(2, 9));
    for (int l = 1; 2 * l <= n; ++l) {
      const double direct = l * oracle::Choose(n, 2 * l).convert_to<double>() *
                            oracle::Choose(n - 2, 2 * l - 2).convert_to<double>() * DoubleFact(2 * l - 1) *
                            DoubleFact(2 * l - 3) * (std::pow(0.4, 2 * l - 1) - std::pow(0.4, 2 * l));
      CHECK(SigmaBar({n, l, 0.4, {}}).pow(2).value() == doctest::Approx(direct).epsilon(1e-9));
      // s * l * Delta_1 * (p^(2l-1) - p^(2l))
      const Rational p(2, 5);
      const Rational alt = Rational(MatchingsComplete(n, l) * l * DeltaR(n, l, 1)) *
                           (Pow(p, 2 * l - 1) - Pow(p, 2 * l));
      CHECK(SigmaBarSquaredExact(n, l, p) == alt);
    }
  }
}

TEST_CASE("beta") {
  CHECK(Beta(10, 5, 0.5) == doctest::Approx(5.0 / std::sqrt(45.0)));
  CHECK(Beta(10, 5, 0.5) == doctest::Approx(0.745356).epsilon(1e-6));
  CHECK(Beta(10, 0, 0.5) == 0.0);
  CHECK_THROWS_AS(Beta(10, 10, 0.5), InvalidArgument);
}

TEST_CASE("mu_n") {
  CHECK(MuN(6, 3, 3, 2).value() == doctest::Approx(0.6));
  CHECK(MuNExact(6, 3, 3, 2) == Rational(3, 5));
  CHECK(MuN(45, 45, 945, 5).value() == doctest::Approx(945));
  CHECK(MuNExact(45, 5, 945, 5) == Rational(945) / Rational(oracle::Choose(45, 5)));
  CHECK_THROWS_AS(MuN(45, 3, 945, 5), InvalidArgument);
  for (int64_t m = 5; m <= 45; m += 5) {
    const LogReal exact = LogReal::FromRational(MuNExact(45, m, 945, 5));
    CHECK(LogReal::RelativeDifference(MuN(45, m, 945, 5), exact) < 1e-9);
  }
  // The approximation tracks the exact value when h^2 / m is small.
  const double exact = MuN(4950, 2000, 1, 3).value();
  CHECK(MuNApprox(4950, 2000, 1, 3).value() == doctest::Approx(exact).epsilon(1e-3));
}

TEST_CASE("f_exact") {
  CHECK(FExact(4, 1, 1) == 6);
  CHECK(FExact(4, 1, 0) == 30);
  for (int n = 2; n <= 8; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      const auto brute = oracle::PairSharedEdgeCounts(n, l);
      for (int i = 0; i <= l; ++i) CHECK(FExact(n, l, i) == brute[i]);
    }
  }
  for (int n = 2; n <= 20; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      BigInt sum = 0;
      for (const BigInt& f : FExactAll(n, l)) sum += f;
      const BigInt s = MatchingsComplete(n, l);
      CHECK(sum == s * s);
      CHECK(FExact(n, l, l) == s);
    }
  }
}

TEST_CASE("z(i), f' and the ratio approximations") {
  CHECK(ZOfI(10, 4, 0) == doctest::Approx(6.4));
  CHECK(ZOfI(10, 4, 4) == 0.0);
  CHECK(ZOfI(100, 40, 10) == doctest::Approx(45.0));
  CHECK_THROWS_AS(ZOfI(10, 5, 5), InvalidArgument);
  CHECK(SharedEdgeRatio(12, 5, 1) == doctest::Approx(0.72));
  CHECK_THROWS_AS(SharedEdgeRatio(12, 5, 0), InvalidArgument);
  for (int n = 12; n <= 40; n += 4) {
    const int l = n / 2 - 1;
    for (int i = 1; i <= (9 * l) / 10; ++i) {
      const double a = ModalSharedEdgeRatio(n, l, i);
      const double z = ZOfI(n, l, i);
      CHECK(a == doctest::Approx(z * z / (8.0 * i * (l - i) * (l - i))).epsilon(1e-12));
      CHECK(a == doctest::Approx(2.0 * (l - i) * (l - i) / (i * double(n - 2 * i) * (n - 2 * i))).epsilon(1e-12));
    }
  }
  const double z = ZOfI(12, 5, 1);
  const double sum = 1 / (2 * z) + 1 / (2 * 5 - z - 2) + 1 / (2 * (12 - 20 + z + 2));
  const LogReal fp = FPrime(12, 5, 1, BigInt(1000));
  CHECK(fp.value() == doctest::Approx(std::sqrt(std::numbers::pi / sum) * 1000).epsilon(1e-12));
  CHECK(fp.value() > 0);
  CHECK_THROWS_AS(FPrime(12, 5, 5, BigInt(1)), InvalidArgument);
}

TEST_CASE("normalized statistics") {
  for (int n : {10, 30, 100}) {
    const ModelParams params{n, 3, 0.3, {}};
    const LogReal lambda = Lambda(params);
    CHECK(NormalizedSubcritical(lambda, params) == doctest::Approx(0.0).epsilon(1e-9));
    const double beta = Beta(params);
    CHECK(NormalizedSupercritical(lambda, params) == doctest::Approx(beta / 2).epsilon(1e-12));
    const LogReal shifted = lambda * LogReal::FromLog(beta * beta / 2);
    CHECK(NormalizedSupercritical(shifted, params) == doctest::Approx(beta).epsilon(1e-9));
  }
  CHECK_THROWS_AS(NormalizedSupercritical(BigInt(0), ModelParams{10, 3, 0.3, {}}), InvalidArgument);
}

TEST_CASE("concentration condition report") {
  const int n = 12, l = 5;
  const int64_t N = 66, m = 26;
  std::vector<double> ratios;
  for (int j = 1; j <= 4; ++j) ratios.push_back(25.0 / (N * double(j)));
  ConcentrationReport r = ConcentrationConditionReport(n, l, m, ratios);
  REQUIRE(r.deviations.size() == 1);
  CHECK(r.deviations[0].relative_deviation == doctest::Approx(0.0));
  REQUIRE(r.flags.size() == 1);
  CHECK(r.flags[0].j == 4);
  ratios[3] = double(m) / (2.0 * N);
  r = ConcentrationConditionReport(n, l, m, ratios);
  CHECK(r.flags[0].holds);
  ratios[3] = std::nextafter(ratios[3], 1.0);
  r = ConcentrationConditionReport(n, l, m, ratios);
  CHECK_FALSE(r.all_flags_hold);
  CHECK(std::isfinite(r.tail_ratio));
  CHECK(r.tail_ratio > 0);
}

TEST_CASE("G(n, m) tail ratio") {
  for (int n : {6, 9, 14}) {
    const int64_t N = n * (n - 1) / 2;
    const double mu = ToDouble(MuNExact(N, 10, N, 1));
    CHECK(GnmTailRatio(n, 1, 10) == doctest::Approx(1.0 / mu));
    // m = N: mu = s
    const BigInt s = MatchingsComplete(n, 2);
    Rational tail = 0;
    for (int i = 2; i <= 2; ++i) tail += Rational(FExact(n, 2, i));
    CHECK(GnmTailRatio(n, 2, N) == doctest::Approx(ToDouble(tail / Rational(s * s))));
  }
  double previous = 1e300;
  for (int n : {12, 16, 20}) {
    const int l = n / 2 - 1;
    const int64_t N = n * (n - 1) / 2;
    const double t = GnmTailRatio(n, l, std::llround(0.4 * N));
    CHECK(t > 0);
    CHECK(t < previous);
    previous = t;
  }
  CHECK_THROWS_AS(GnmTailRatio(12, 5, 30, 0.8), InvalidArgument);
}

TEST_CASE("regime classification") {
  CHECK(RegimeClassify({10000, 1, 0.5, {}}).regime == Regime::kSubcritical);
  CHECK(RegimeClassify({24, 12, 0.25, {}}).regime == Regime::kBoundary);
  CHECK(RegimeClassify({24, 12, 0.04, {}}).regime == Regime::kSupercritical);
}

TEST_CASE("second moment identity against the brute-force law") {
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      for (const Rational p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        const auto law = oracle::BruteLaw(n, l, p);
        CHECK(SecondMomentFromF(n, l, p) == oracle::LawMoment(law, 2, 0));
        const Rational mean = oracle::LawMoment(law, 1, 0);
        CHECK(VarianceFromF(n, l, p) == oracle::LawMoment(law, 2, mean));
      }
    }
  }
}

}  // TEST_SUITE
