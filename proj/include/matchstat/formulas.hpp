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

#ifndef MATCHSTAT_FORMULAS_HPP_
#define MATCHSTAT_FORMULAS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchstat/log_real.hpp"
#include "matchstat/numeric.hpp"

namespace matchstat {

// Shape of one experiment: X counts l-matchings in G(n, p), or in G(n, m)
// when m is set.
struct ModelParams {
  int n = 0;
  int l = 0;
  double p = 0.0;
  std::optional<int64_t> m;

  // N = C(n, 2).
  int64_t N() const { return static_cast<int64_t>(n) * (n - 1) / 2; }
  // Throws InvalidArgument unless 1 <= l <= n/2, 0 < p < 1, 0 <= m <= N.
  void Validate() const;
};

inline constexpr double kDefaultDelta = 0.9;

// Expected number of l-matchings, C(n,2l) (2l-1)!! p^l.
LogReal Lambda(const ModelParams& params);
// The normalizer sigma-bar, the square root of
//   l C(n,2l) C(n-2,2l-2) (2l-1)!! (2l-3)!! (p^(2l-1) - p^(2l)).
LogReal SigmaBar(const ModelParams& params);
// l sqrt((1-p)/(pN)); zero when l = 0.
double Beta(int n, int l, double p);
inline double Beta(const ModelParams& params) { return Beta(params.n, params.l, params.p); }

// s C(N-h, m-h) / C(N, m), the mean number of h-edge members of a family of
// size s inside G(n, m).
LogReal MuN(int64_t N, int64_t m, const BigInt& s, int64_t h);
// s (m/N)^h exp(-(N-m)/(mN) h^2/2).
LogReal MuNApprox(int64_t N, int64_t m, const BigInt& s, int64_t h);

// Ordered pairs of l-matchings of K_n sharing exactly i edges.
BigInt FExact(int n, int l, int i);
// f_0..f_l.
std::vector<BigInt> FExactAll(int n, int l);

// 4 (l-i)^2 / (n - 2i).
double ZOfI(int n, int l, int i);
// sqrt(pi) (1/(2z) + 1/(2l-z-2i) + 1/(2(n-4l+z+2i)))^(-1/2) f_at_mode with
// z = z(i).
LogReal FPrime(int n, int l, int i, const BigInt& f_at_mode, double delta = kDefaultDelta);
// The bracketed sum inside FPrime; exposed for tests.
double FPrimeDenominatorSum(int n, int l, int i);

// n^2 / (8 i l^2) and z(i)^2 / (8 i (l-i)^2), for 1 <= i <= floor(9l/10).
double SharedEdgeRatio(int n, int l, int i);
double ModalSharedEdgeRatio(int n, int l, int i);

// (x - lambda) / sigma-bar.
double NormalizedSubcritical(const BigInt& x, const ModelParams& params);
// (ln(x/lambda) + beta^2/2) / beta; x must be positive.
double NormalizedSupercritical(const BigInt& x, const ModelParams& params);
// Same statistics for a real-valued x, used by algebraic checks.
double NormalizedSubcritical(const LogReal& x, const ModelParams& params);
double NormalizedSupercritical(const LogReal& x, const ModelParams& params);

struct ConcentrationDeviation {
  int j = 0;
  double r = 0.0;
  double predicted = 0.0;  // h^2 / (N j)
  double relative_deviation = 0.0;
};

struct ConcentrationFlag {
  int j = 0;
  double r = 0.0;
  double bound = 0.0;  // m / (2N)
  bool holds = false;
};

struct ConcentrationReport {
  int n = 0;
  int l = 0;
  int64_t m = 0;
  double rho = 0.0;  // h^2 / m
  int gamma = 0;     // floor(delta l)
  double K = 0.0;
  std::vector<ConcentrationDeviation> deviations;  // 1 <= j <= K rho
  std::vector<ConcentrationFlag> flags;            // 4 rho <= j <= gamma
  bool all_flags_hold = true;
  double tail_ratio = 0.0;                 // sum_{j > gamma} f_j / (s mu_n)
};

// ratios[j-1] holds r_j for j = 1..gamma (extra entries are ignored).
ConcentrationReport ConcentrationConditionReport(int n, int l, int64_t m, const std::vector<double>& ratios,
                                 double K = 2.0, double delta = kDefaultDelta);

// sum_{i >= ceil(delta l)} f_i / (s mu_n), exact up to the final rounding.
double GnmTailRatio(int n, int l, int64_t m, double delta = kDefaultDelta);

enum class Regime { kSubcritical, kSupercritical, kBoundary };
std::string RegimeName(Regime r);

struct RegimeReport {
  double ratio = 0.0;  // l / (n sqrt p)
  Regime regime = Regime::kBoundary;
  double c = 1.0;
  double tol = 0.1;
};

RegimeReport RegimeClassify(const ModelParams& params, double c = 1.0, double tol = 0.1);

// Exact counterparts at a rational p.
Rational LambdaExact(int n, int l, const Rational& p);
Rational SigmaBarSquaredExact(int n, int l, const Rational& p);
// s [m]_h / [N]_h.
Rational MuNExact(int64_t N, int64_t m, const BigInt& s, int64_t h);
// sum_i f_i p^(2l-i) = E[X^2] in G(n, p).
Rational SecondMomentFromF(int n, int l, const Rational& p);
// sum_{i >= 1} f_i (p^(2l-i) - p^(2l)) = Var X in G(n, p).
Rational VarianceFromF(int n, int l, const Rational& p);

}  // namespace matchstat

#endif  // MATCHSTAT_FORMULAS_HPP_
