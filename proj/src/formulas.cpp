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

#include "matchstat/formulas.hpp"

#include <cmath>
#include <numbers>

#include "matchstat/errors.hpp"
#include "matchstat/match_count.hpp"

namespace matchstat {

void ModelParams::Validate() const {
  Require(n >= 2, "n must be at least 2");
  Require(l >= 1 && 2 * l <= n, "l must satisfy 1 <= l <= floor(n/2)");
  Require(p > 0.0 && p < 1.0, "p must satisfy 0 < p < 1");
  if (m) Require(*m >= 0 && *m <= N(), "m must satisfy 0 <= m <= C(n,2)");
}

namespace {

LogReal PowP(double p, double exponent) { return LogReal::FromLog(exponent * std::log(p)); }

// p^(2l-1) - p^(2l) = p^(2l-1) (1 - p).
LogReal KissingWeight(int l, double p) {
  return LogReal::FromLog((2.0 * l - 1.0) * std::log(p) + std::log1p(-p));
}

int GammaOf(int l, double delta) { return static_cast<int>(std::floor(delta * l + 1e-12)); }

}  // namespace

LogReal Lambda(const ModelParams& params) {
  params.Validate();
  return LogReal::FromInt(MatchingsComplete(params.n, params.l)) * PowP(params.p, params.l);
}

LogReal SigmaBar(const ModelParams& params) {
  params.Validate();
  const int n = params.n;
  const int l = params.l;
  const BigInt count =
      BigInt(l) * MatchingsComplete(n, l) * Binomial(n - 2, 2L * l - 2) * DoubleFactorial(2L * l - 3);
  return (LogReal::FromInt(count) * KissingWeight(l, params.p)).sqrt();
}

double Beta(int n, int l, double p) {
  Require(n >= 2, "n must be at least 2");
  Require(l >= 0 && 2 * l <= n, "l must satisfy 0 <= l <= floor(n/2)");
  Require(p > 0.0 && p <= 1.0, "p must satisfy 0 < p <= 1");
  if (l == 0) return 0.0;
  const double N = static_cast<double>(n) * (n - 1) / 2.0;
  return l * std::sqrt((1.0 - p) / (p * N));
}

LogReal MuN(int64_t N, int64_t m, const BigInt& s, int64_t h) {
  Require(N >= 0 && m >= 0 && m <= N, "m must satisfy 0 <= m <= N");
  Require(h >= 0, "h must be non-negative");
  Require(h <= m, "mu_n needs h <= m");
  double log_ratio = 0.0;
  for (int64_t j = 0; j < h; ++j) {
    log_ratio += std::log(static_cast<double>(m - j)) - std::log(static_cast<double>(N - j));
  }
  return LogReal::FromInt(s) * LogReal::FromLog(log_ratio);
}

LogReal MuNApprox(int64_t N, int64_t m, const BigInt& s, int64_t h) {
  Require(m >= 1 && m <= N, "the approximation needs 1 <= m <= N");
  Require(h >= 0, "h must be non-negative");
  const double md = static_cast<double>(m);
  const double Nd = static_cast<double>(N);
  const double hd = static_cast<double>(h);
  const double log_value = hd * std::log(md / Nd) - (Nd - md) / (md * Nd) * hd * hd / 2.0;
  return LogReal::FromInt(s) * LogReal::FromLog(log_value);
}

BigInt FExact(int n, int l, int i) {
  Require(2 * l <= n && l >= 0, "need 2l <= n");
  Require(i >= 0 && i <= l, "need 0 <= i <= l");
  BigInt sum = 0;
  for (int j = i; j <= l; ++j) {
    const BigInt term = Binomial(j, i) * Binomial(l, j) * DeltaR(n, l, j);
    if ((j - i) % 2 == 0) sum += term;
    else sum -= term;
  }
  return MatchingsComplete(n, l) * sum;
}

std::vector<BigInt> FExactAll(int n, int l) {
  std::vector<BigInt> f;
  f.reserve(static_cast<std::size_t>(l) + 1);
  for (int i = 0; i <= l; ++i) f.push_back(FExact(n, l, i));
  return f;
}

double ZOfI(int n, int l, int i) {
  Require(2 * i < n, "z(i) needs 2i < n");
  const double d = static_cast<double>(l - i);
  return 4.0 * d * d / static_cast<double>(n - 2 * i);
}

double FPrimeDenominatorSum(int n, int l, int i) {
  const double z = ZOfI(n, l, i);
  const double a = 2.0 * z;
  const double b = 2.0 * l - z - 2.0 * i;
  const double c = 2.0 * (n - 4.0 * l + z + 2.0 * i);
  Require(a > 0 && b > 0 && c > 0, "f' is undefined: a denominator is not positive");
  return 1.0 / a + 1.0 / b + 1.0 / c;
}

LogReal FPrime(int n, int l, int i, const BigInt& f_at_mode, double delta) {
  Require(i >= 0 && i <= delta * l + 1e-12, "f' needs i <= delta l");
  const double sum = FPrimeDenominatorSum(n, l, i);
  return LogReal::FromInt(f_at_mode) *
         LogReal::FromLog(0.5 * std::log(std::numbers::pi) - 0.5 * std::log(sum));
}

double SharedEdgeRatio(int n, int l, int i) {
  Require(i >= 1 && i <= GammaOf(l, kDefaultDelta), "need 1 <= i <= floor(9l/10)");
  return static_cast<double>(n) * n / (8.0 * i * static_cast<double>(l) * l);
}

double ModalSharedEdgeRatio(int n, int l, int i) {
  Require(i >= 1 && i <= GammaOf(l, kDefaultDelta), "need 1 <= i <= floor(9l/10)");
  const double z = ZOfI(n, l, i);
  const double d = static_cast<double>(l - i);
  return z * z / (8.0 * i * d * d);
}

double NormalizedSubcritical(const LogReal& x, const ModelParams& params) {
  return ((x - Lambda(params)) / SigmaBar(params)).value();
}

double NormalizedSupercritical(const LogReal& x, const ModelParams& params) {
  Require(x.sign() > 0, "the log statistic needs x > 0");
  const double beta = Beta(params);
  const double log_ratio = x.log_abs() - Lambda(params).log_abs();
  return (log_ratio + beta * beta / 2.0) / beta;
}

double NormalizedSubcritical(const BigInt& x, const ModelParams& params) {
  return NormalizedSubcritical(LogReal::FromInt(x), params);
}

double NormalizedSupercritical(const BigInt& x, const ModelParams& params) {
  Require(x > 0, "the log statistic needs x > 0");
  return NormalizedSupercritical(LogReal::FromInt(x), params);
}

ConcentrationReport ConcentrationConditionReport(int n, int l, int64_t m, const std::vector<double>& ratios,
                                 double K, double delta) {
  Require(n >= 2 && l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  const int64_t N = static_cast<int64_t>(n) * (n - 1) / 2;
  Require(m >= l && m <= N, "need l <= m <= N");
  ConcentrationReport report;
  report.n = n;
  report.l = l;
  report.m = m;
  report.K = K;
  report.rho = static_cast<double>(l) * l / static_cast<double>(m);
  report.gamma = GammaOf(l, delta);
  const int available = static_cast<int>(ratios.size());

  const int dev_end = std::min<int>(static_cast<int>(std::floor(K * report.rho)), available);
  for (int j = 1; j <= dev_end; ++j) {
    ConcentrationDeviation d;
    d.j = j;
    d.r = ratios[j - 1];
    d.predicted = static_cast<double>(l) * l / (static_cast<double>(N) * j);
    d.relative_deviation = (d.r - d.predicted) / d.predicted;
    report.deviations.push_back(d);
  }

  const double bound = static_cast<double>(m) / (2.0 * static_cast<double>(N));
  const int flag_begin = std::max(1, static_cast<int>(std::ceil(4.0 * report.rho)));
  const int flag_end = std::min(report.gamma, available);
  for (int j = flag_begin; j <= flag_end; ++j) {
    ConcentrationFlag f;
    f.j = j;
    f.r = ratios[j - 1];
    f.bound = bound;
    f.holds = f.r <= bound;
    report.all_flags_hold = report.all_flags_hold && f.holds;
    report.flags.push_back(f);
  }

  const std::vector<BigInt> f = FExactAll(n, l);
  BigInt tail = 0;
  for (int j = report.gamma + 1; j <= l; ++j) tail += f[j];
  const BigInt s = MatchingsComplete(n, l);
  report.tail_ratio = ToDouble(Rational(tail) / (Rational(s) * MuNExact(N, m, s, l)));
  return report;
}

double GnmTailRatio(int n, int l, int64_t m, double delta) {
  Require(delta > 0.8, "the tail ratio needs delta > 4/5");
  Require(n >= 2 && l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  const int64_t N = static_cast<int64_t>(n) * (n - 1) / 2;
  Require(m >= l && m <= N, "need l <= m <= N");
  const int first = static_cast<int>(std::ceil(delta * l - 1e-12));
  BigInt tail = 0;
  for (int i = first; i <= l; ++i) tail += FExact(n, l, i);
  const BigInt s = MatchingsComplete(n, l);
  return ToDouble(Rational(tail) / (Rational(s) * MuNExact(N, m, s, l)));
}

std::string RegimeName(Regime r) {
  switch (r) {
    case Regime::kSubcritical: return "subcritical";
    case Regime::kSupercritical: return "supercritical";
    case Regime::kBoundary: return "boundary";
  }
  return "boundary";
}

RegimeReport RegimeClassify(const ModelParams& params, double c, double tol) {
  params.Validate();
  Require(c > 0.0 && tol >= 0.0 && tol < 1.0, "need c > 0 and 0 <= tol < 1");
  RegimeReport r;
  r.c = c;
  r.tol = tol;
  r.ratio = params.l / (params.n * std::sqrt(params.p));
  if (r.ratio < c * (1.0 - tol)) r.regime = Regime::kSubcritical;
  else if (r.ratio > c * (1.0 + tol)) r.regime = Regime::kSupercritical;
  else r.regime = Regime::kBoundary;
  return r;
}

Rational LambdaExact(int n, int l, const Rational& p) {
  return Rational(MatchingsComplete(n, l)) * Pow(p, static_cast<unsigned>(l));
}

Rational SigmaBarSquaredExact(int n, int l, const Rational& p) {
  Require(l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  const BigInt count =
      BigInt(l) * MatchingsComplete(n, l) * Binomial(n - 2, 2L * l - 2) * DoubleFactorial(2L * l - 3);
  const Rational w = Pow(p, 2u * l - 1) - Pow(p, 2u * l);
  return Rational(count) * w;
}

Rational MuNExact(int64_t N, int64_t m, const BigInt& s, int64_t h) {
  Require(m >= 0 && m <= N, "m must satisfy 0 <= m <= N");
  Require(h >= 0 && h <= m, "mu_n needs 0 <= h <= m");
  BigInt num = s;
  BigInt den = 1;
  for (int64_t j = 0; j < h; ++j) {
    num *= m - j;
    den *= N - j;
  }
  return Rational(num, den);
}

Rational SecondMomentFromF(int n, int l, const Rational& p) {
  const std::vector<BigInt> f = FExactAll(n, l);
  Rational total = 0;
  for (int i = 0; i <= l; ++i) total += Rational(f[i]) * Pow(p, static_cast<unsigned>(2 * l - i));
  return total;
}

Rational VarianceFromF(int n, int l, const Rational& p) {
  const std::vector<BigInt> f = FExactAll(n, l);
  const Rational base = Pow(p, static_cast<unsigned>(2 * l));
  Rational total = 0;
  for (int i = 1; i <= l; ++i) {
    total += Rational(f[i]) * (Pow(p, static_cast<unsigned>(2 * l - i)) - base);
  }
  return total;
}

}  // namespace matchstat
