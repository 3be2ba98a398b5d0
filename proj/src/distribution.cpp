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

#include "matchstat/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "matchstat/errors.hpp"
#include "matchstat/pair_census.hpp"

namespace matchstat {

namespace {

// Runs body(t) for t in [0, count) on up to `threads` workers. Each index is
// handled exactly once, so writing into per-index slots is deterministic.
template <typename Body>
void ParallelFor(uint64_t count, int threads, Body body) {
  const int workers = static_cast<int>(std::min<uint64_t>(std::max(threads, 1), std::max<uint64_t>(count, 1)));
  if (workers <= 1) {
    for (uint64_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<uint64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      try {
        for (uint64_t t = next++; t < count && !failed; t = next++) body(t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExactDistribution::ExactDistribution(int n, int l, const Rational& p, int threads)
    : n_(n), l_(l), p_(p) {
  Require(n >= 2 && n <= kExactMaxN, "exhaustive enumeration needs 2 <= n <= 7");
  Require(l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  Require(p >= 0 && p <= 1, "p must lie in [0, 1]");
  const int N = static_cast<int>(EdgeSlots(n));
  std::vector<uint32_t> masks;
  for (const Matching& m : EnumerateMatchings(n, l)) {
    uint32_t mask = 0;
    for (const Edge& e : m.edges()) mask |= uint32_t{1} << EdgeIndex(n, e.u, e.v);
    masks.push_back(mask);
  }
  const std::size_t values = masks.size() + 1;
  const std::size_t width = static_cast<std::size_t>(N) + 1;

  // Contiguous blocks of graph masks, one tally per block, summed in order.
  const uint64_t total = uint64_t{1} << N;
  const uint64_t blocks = std::min<uint64_t>(64, total);
  std::vector<std::vector<uint64_t>> tallies(blocks, std::vector<uint64_t>(values * width, 0));
  ParallelFor(blocks, threads, [&](uint64_t b) {
    const uint64_t lo = total * b / blocks;
    const uint64_t hi = total * (b + 1) / blocks;
    auto& tally = tallies[b];
    for (uint64_t g = lo; g < hi; ++g) {
      const auto gm = static_cast<uint32_t>(g);
      std::size_t x = 0;
      for (uint32_t m : masks) x += (gm & m) == m;
      ++tally[x * width + std::popcount(gm)];
    }
  });
  by_edges_.assign(values, std::vector<uint64_t>(width, 0));
  for (const auto& tally : tallies) {
    for (std::size_t x = 0; x < values; ++x) {
      for (std::size_t e = 0; e < width; ++e) by_edges_[x][e] += tally[x * width + e];
    }
  }

  std::vector<Rational> weight(width);
  for (int e = 0; e <= N; ++e) {
    weight[e] = Pow(p, static_cast<unsigned>(e)) * Pow(Rational(1) - p, static_cast<unsigned>(N - e));
  }
  for (std::size_t x = 0; x < values; ++x) {
    Rational prob = 0;
    for (std::size_t e = 0; e < width; ++e) {
      if (by_edges_[x][e] != 0) prob += Rational(by_edges_[x][e]) * weight[e];
    }
    if (prob != 0) pmf_[x] = prob;
  }
}

Rational ExactDistribution::TotalProbability() const {
  Rational total = 0;
  for (const auto& [x, prob] : pmf_) total += prob;
  return total;
}

Rational ExactDistribution::RawMoment(int k) const {
  Require(k >= 0, "moment order must be non-negative");
  Rational total = 0;
  for (const auto& [x, prob] : pmf_) total += prob * Pow(Rational(x), static_cast<unsigned>(k));
  return total;
}

Rational ExactDistribution::Mean() const { return RawMoment(1); }

Rational ExactDistribution::CentralMoment(int k) const {
  Require(k >= 0, "moment order must be non-negative");
  const Rational mean = Mean();
  Rational total = 0;
  for (const auto& [x, prob] : pmf_) total += prob * Pow(Rational(x) - mean, static_cast<unsigned>(k));
  return total;
}

Rational ExactDistribution::GnmMean(int64_t m) const {
  const int64_t N = static_cast<int64_t>(EdgeSlots(n_));
  Require(m >= 0 && m <= N, "m must satisfy 0 <= m <= C(n,2)");
  BigInt sum = 0;
  for (std::size_t x = 0; x < by_edges_.size(); ++x) sum += BigInt(x) * by_edges_[x][m];
  return Rational(sum, Binomial(N, m));
}

Rational ExactCentralMoment(int n, int l, const Rational& p, int k) {
  return ExactDistribution(n, l, p).CentralMoment(k);
}

Rational ExactGnmMean(int n, int l, int64_t m) {
  return ExactDistribution(n, l, Rational(1, 2)).GnmMean(m);
}

std::string ModelName(Model m) { return m == Model::kGnp ? "gnp" : "gnm"; }

Model ParseModel(const std::string& text) {
  if (text == "gnp") return Model::kGnp;
  if (text == "gnm") return Model::kGnm;
  throw InvalidArgument("model must be gnp or gnm, got \"" + text + "\"");
}

std::string BackendName(Backend b) {
  switch (b) {
    case Backend::kAuto: return "auto";
    case Backend::kSparse: return "sparse";
    case Backend::kPolynomial: return "polynomial";
  }
  return "auto";
}

Backend ParseBackend(const std::string& text) {
  if (text == "auto") return Backend::kAuto;
  if (text == "sparse") return Backend::kSparse;
  if (text == "polynomial") return Backend::kPolynomial;
  throw InvalidArgument("backend must be auto, sparse or polynomial, got \"" + text + "\"");
}

Backend ResolveBackend(int n, int l, Backend requested, const BackendPolicy& policy) {
  const bool sparse_ok = l <= std::min(policy.sparse_max_l, kSparseMaxL);
  const bool poly_ok = n <= std::min(policy.polynomial_max_n, kBitsetVertexCap);
  switch (requested) {
    case Backend::kSparse:
      if (!sparse_ok) throw CapExceeded("the sparse kernel needs l <= " + std::to_string(policy.sparse_max_l));
      return requested;
    case Backend::kPolynomial:
      if (!poly_ok) throw CapExceeded("the polynomial kernel needs n <= " + std::to_string(policy.polynomial_max_n));
      return requested;
    case Backend::kAuto:
      break;
  }
  if (l <= 2 && sparse_ok) return Backend::kSparse;
  if (poly_ok) return Backend::kPolynomial;
  if (sparse_ok) return Backend::kSparse;
  throw CapExceeded("no counting backend: need l <= " + std::to_string(policy.sparse_max_l) +
                    " or n <= " + std::to_string(policy.polynomial_max_n));
}

BigInt CountWithBackend(const Graph& g, int l, Backend resolved, const BackendPolicy& policy) {
  if (resolved == Backend::kSparse) return CountLMatchingsSparse(g, l);
  CountOptions options;
  options.vertex_cap = policy.polynomial_max_n;
  return CountMatchings(g, options)[static_cast<std::size_t>(l)];
}

SampleSet McSample(const McConfig& config) {
  const int n = config.n;
  Require(n >= 2, "n must be at least 2");
  Require(config.l >= 1 && 2 * config.l <= n, "need 1 <= l <= floor(n/2)");
  Require(config.threads >= 1, "threads must be at least 1");
  if (config.model == Model::kGnp) {
    Require(config.p >= 0.0 && config.p <= 1.0, "p must lie in [0, 1]");
  } else {
    Require(config.m >= 0 && static_cast<std::size_t>(config.m) <= EdgeSlots(n),
            "m must satisfy 0 <= m <= C(n,2)");
  }
  SampleSet s;
  s.config = config;
  s.backend = ResolveBackend(n, config.l, config.backend, config.policy);
  s.counts.resize(config.trials);
  ParallelFor(config.trials, config.threads, [&](uint64_t t) {
    const SeedSpec spec{config.seed, config.stream_base + t};
    const Graph g = config.model == Model::kGnp
                        ? SampleGnp(n, config.p, spec)
                        : SampleGnm(n, static_cast<std::size_t>(config.m), spec);
    s.counts[t] = CountWithBackend(g, config.l, s.backend, config.policy);
  });
  s.zero_count = static_cast<uint64_t>(std::count(s.counts.begin(), s.counts.end(), BigInt(0)));
  return s;
}

namespace {

ModelParams ParamsOf(const SampleSet& s) {
  ModelParams params{s.config.n, s.config.l, s.config.p, std::nullopt};
  params.Validate();
  return params;
}

}  // namespace

std::vector<double> LinearStatistics(const SampleSet& s) {
  const ModelParams params = ParamsOf(s);
  const LogReal lambda = Lambda(params);
  const LogReal sigma = SigmaBar(params);
  std::vector<double> out;
  out.reserve(s.counts.size());
  for (const BigInt& x : s.counts) out.push_back(((LogReal::FromInt(x) - lambda) / sigma).value());
  return out;
}

std::vector<double> LogStatistics(const SampleSet& s) {
  const ModelParams params = ParamsOf(s);
  const double log_lambda = Lambda(params).log_abs();
  const double beta = Beta(params);
  std::vector<double> out;
  for (const BigInt& x : s.counts) {
    if (x <= 0) continue;
    out.push_back((LogOf(x) - log_lambda + beta * beta / 2.0) / beta);
  }
  return out;
}

MeanRatio GnmMeanRatio(const SampleSet& s) {
  Require(s.config.model == Model::kGnm, "the mean ratio needs G(n, m) samples");
  Require(s.counts.size() >= 2, "the mean ratio needs at least 2 samples");
  const int64_t N = static_cast<int64_t>(EdgeSlots(s.config.n));
  const BigInt sc = MatchingsComplete(s.config.n, s.config.l);
  Require(s.config.m >= s.config.l, "mu_n is zero when m < l");
  const LogReal mu = LogReal::FromRational(MuNExact(N, s.config.m, sc, s.config.l));
  std::vector<double> ratios;
  ratios.reserve(s.counts.size());
  for (const BigInt& x : s.counts) ratios.push_back((LogReal::FromInt(x) / mu).value());
  MeanRatio r;
  r.mean = Mean(ratios);
  r.std_error = std::sqrt(SampleVariance(ratios) / static_cast<double>(ratios.size()));
  r.z = r.std_error > 0.0 ? (r.mean - 1.0) / r.std_error : 0.0;
  return r;
}

std::string MomentSourceName(MomentSource s) { return s == MomentSource::kExact ? "exact" : "mc"; }

MomentSource ParseMomentSource(const std::string& text) {
  if (text == "exact") return MomentSource::kExact;
  if (text == "mc") return MomentSource::kMonteCarlo;
  throw InvalidArgument("source must be exact or mc, got \"" + text + "\"");
}

MomentReport BuildMomentReport(const MomentConfig& config) {
  Require(config.k_max >= 2, "k_max must be at least 2");
  const Rational p_exact = ParseRational(config.p);
  const ModelParams params{config.n, config.l, ToDouble(p_exact), std::nullopt};
  params.Validate();
  const LogReal sigma = SigmaBar(params);
  MomentReport report;
  report.source = config.source;

  auto theoretical = [&](int k) {
    if (k % 2 == 1) return LogReal::Zero();
    return LogReal::FromInt(DoubleFactorial(k - 1)) * sigma.pow(k);
  };
  auto ratio_of = [&](int k, const LogReal& measured) {
    if (k % 2 == 1) {
      const LogReal mag = measured.sign() < 0 ? -measured : measured;
      return (mag / sigma.pow(k)).value();
    }
    return (measured / theoretical(k)).value();
  };

  if (config.source == MomentSource::kExact) {
    std::vector<Rational> moments;
    if (config.n <= kExactMaxN) {
      const ExactDistribution dist(config.n, config.l, p_exact, config.threads);
      for (int k = 2; k <= config.k_max; ++k) moments.push_back(dist.CentralMoment(k));
    } else {
      if (config.k_max != 2) {
        throw CapExceeded("exact moments beyond k = 2 need n <= 7");
      }
      moments.push_back(VarianceFromF(config.n, config.l, p_exact));
    }
    for (int k = 2; k <= config.k_max; ++k) {
      MomentRow row;
      row.k = k;
      row.measured_exact = moments[k - 2];
      row.measured = LogReal::FromRational(moments[k - 2]);
      row.theoretical = theoretical(k);
      row.ratio = ratio_of(k, row.measured);
      report.rows.push_back(row);
    }
    return report;
  }

  Require(config.trials >= 2, "Monte Carlo moments need at least 2 trials");
  McConfig mc;
  mc.n = config.n;
  mc.l = config.l;
  mc.p = params.p;
  mc.trials = config.trials;
  mc.seed = config.seed;
  mc.threads = config.threads;
  mc.policy = config.policy;
  const std::vector<double> z = LinearStatistics(McSample(mc));
  for (int k = 2; k <= config.k_max; ++k) {
    std::vector<double> zk;
    zk.reserve(z.size());
    for (double v : z) zk.push_back(std::pow(v, k));
    const double m = Mean(zk);
    const double se = std::sqrt(SampleVariance(zk) / static_cast<double>(zk.size()));
    MomentRow row;
    row.k = k;
    row.measured = LogReal::FromDouble(m) * sigma.pow(k);
    row.theoretical = theoretical(k);
    row.ratio = ratio_of(k, row.measured);
    const double scale = k % 2 == 0 ? ToDouble(Rational(DoubleFactorial(k - 1))) : 1.0;
    row.std_error = se / scale;
    report.rows.push_back(row);
  }
  return report;
}

LimitLawResult LimitLawExperiment(const LimitLawConfig& config) {
  Require(config.mc.model == Model::kGnp, "the limit-law experiment runs on G(n, p)");
  Require(config.mc.p <= kMaxP, "1 - p must stay bounded away from 0: need p <= 0.95");
  const ModelParams params{config.mc.n, config.mc.l, config.mc.p, std::nullopt};
  params.Validate();
  Require(config.mc.trials >= kMinKsSamples, "the limit-law experiment needs at least 20 trials");
  LimitLawResult r;
  r.regime = RegimeClassify(params, config.c, config.tol);
  r.samples = McSample(config.mc);
  r.excluded = r.samples.zero_count;
  r.excluded_fraction = static_cast<double>(r.excluded) / static_cast<double>(config.mc.trials);
  if (config.strict_zero_exclusion && r.regime.regime == Regime::kSupercritical &&
      r.excluded_fraction > kMaxZeroFraction) {
    throw InvalidArgument("log statistic excluded " + std::to_string(r.excluded) + " of " +
                          std::to_string(config.mc.trials) + " samples with X = 0, above the 1% limit");
  }
  r.normal = KsVsNormal(LinearStatistics(r.samples));
  const std::vector<double> logs = LogStatistics(r.samples);
  if (logs.size() >= kMinKsSamples) r.lognormal = KsVsNormal(logs);
  return r;
}

std::vector<ScanRow> TransitionScan(const ScanConfig& config) {
  Require(config.l_min >= 1 && config.l_min <= config.l_max && 2 * config.l_max <= config.n,
          "need 1 <= l_min <= l_max <= floor(n/2)");
  Require(config.p > 0.0 && config.p <= kMaxP, "need 0 < p <= 0.95");
  Require(config.trials >= kMinKsSamples, "the scan needs at least 20 trials per row");
  std::vector<ScanRow> rows;
  for (int l = config.l_min; l <= config.l_max; ++l) {
    McConfig mc;
    mc.n = config.n;
    mc.l = l;
    mc.p = config.p;
    mc.trials = config.trials;
    mc.seed = config.seed;
    mc.stream_base = static_cast<uint64_t>(l) << 40;
    mc.threads = config.threads;
    mc.policy = config.policy;
    const SampleSet s = McSample(mc);
    const std::vector<double> z = LinearStatistics(s);
    ScanRow row;
    row.l = l;
    row.regime = RegimeClassify({config.n, l, config.p, std::nullopt}, config.c, config.tol);
    row.skewness = Skewness(z);
    row.normal = KsVsNormal(z);
    const std::vector<double> logs = LogStatistics(s);
    if (logs.size() >= kMinKsSamples) row.lognormal = KsVsNormal(logs);
    row.zero_count = s.zero_count;
    row.backend = BackendName(s.backend);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace matchstat
