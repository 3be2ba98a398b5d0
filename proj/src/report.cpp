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

#include "matchstat/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "matchstat/distribution.hpp"
#include "matchstat/errors.hpp"
#include "matchstat/formulas.hpp"
#include "matchstat/graph.hpp"
#include "matchstat/match_count.hpp"
#include "matchstat/pair_census.hpp"
#include "matchstat/stats.hpp"
#include "matchstat/switching.hpp"

#ifndef MATCHSTAT_VERSION
#define MATCHSTAT_VERSION "0.0.0"
#endif

namespace matchstat {

using nlohmann::json;

std::string FormatReal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json RealJson(double x) {
  if (!std::isfinite(x)) return FormatReal(x);
  return std::strtod(FormatReal(x).c_str(), nullptr);
}

namespace {

// ---------------------------------------------------------------- config

enum class Kind { kInt, kReal, kText, kString, kBool };

struct Field {
  std::string key;
  Kind kind;
  json fallback;  // null means required
};

json Coerce(const Field& f, const json& v) {
  const std::string where = "config key \"" + f.key + "\"";
  switch (f.kind) {
    case Kind::kInt: {
      if (v.is_number_integer()) return v;
      if (v.is_number_float()) {
        const double d = v.get<double>();
        Require(std::floor(d) == d, where + " must be an integer");
        return static_cast<int64_t>(d);
      }
      Require(v.is_string(), where + " must be an integer");
      const std::string s = v.get<std::string>();
      std::size_t used = 0;
      int64_t out = 0;
      try {
        out = std::stoll(s, &used);
      } catch (const std::exception&) {
        throw InvalidArgument(where + " must be an integer, got \"" + s + "\"");
      }
      Require(used == s.size(), where + " must be an integer, got \"" + s + "\"");
      return out;
    }
    case Kind::kReal: {
      if (v.is_number()) return v.get<double>();
      Require(v.is_string(), where + " must be a number");
      const std::string s = v.get<std::string>();
      char* end = nullptr;
      const double d = std::strtod(s.c_str(), &end);
      Require(!s.empty() && end == s.c_str() + s.size(), where + " must be a number, got \"" + s + "\"");
      return d;
    }
    case Kind::kText: {
      std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      Require(v.is_string() || v.is_number(), where + " must be a number or a string");
      ParseRational(s);
      return s;
    }
    case Kind::kString:
      Require(v.is_string(), where + " must be a string");
      return v;
    case Kind::kBool:
      if (v.is_boolean()) return v;
      if (v.is_string() && (v == "true" || v == "false")) return v == "true";
      throw InvalidArgument(where + " must be true or false");
  }
  return v;
}

struct Resolved {
  json config;
  int threads = 1;
};

Resolved Resolve(const std::vector<Field>& fields, const json& given) {
  Require(given.is_object(), "config must be a JSON object");
  Resolved r;
  r.config = json::object();
  for (const auto& [key, value] : given.items()) {
    if (key == "threads") continue;
    const bool known = std::any_of(fields.begin(), fields.end(), [&](const Field& f) { return f.key == key; });
    Require(known, "unknown config key \"" + key + "\"");
  }
  for (const Field& f : fields) {
    if (given.contains(f.key) && !given.at(f.key).is_null()) {
      r.config[f.key] = Coerce(f, given.at(f.key));
    } else {
      Require(!f.fallback.is_null(), "config key \"" + f.key + "\" is required");
      r.config[f.key] = f.fallback;
    }
  }
  if (given.contains("threads")) {
    const json t = Coerce({"threads", Kind::kInt, 1}, given.at("threads"));
    r.threads = static_cast<int>(t.get<int64_t>());
    Require(r.threads >= 1 && r.threads <= 1024, "threads must lie in [1, 1024]");
  }
  return r;
}

int IntOf(const json& c, const std::string& key) {
  const int64_t v = c.at(key).get<int64_t>();
  Require(v >= INT32_MIN && v <= INT32_MAX, "config key \"" + key + "\" is out of range");
  return static_cast<int>(v);
}
int64_t Int64Of(const json& c, const std::string& key) { return c.at(key).get<int64_t>(); }
uint64_t UintOf(const json& c, const std::string& key) {
  const json& v = c.at(key);
  if (v.is_number_unsigned()) return v.get<uint64_t>();
  const int64_t s = v.get<int64_t>();
  Require(s >= 0, "config key \"" + key + "\" must be non-negative");
  return static_cast<uint64_t>(s);
}
double RealOf(const json& c, const std::string& key) { return c.at(key).get<double>(); }
std::string StrOf(const json& c, const std::string& key) { return c.at(key).get<std::string>(); }
bool BoolOf(const json& c, const std::string& key) { return c.at(key).get<bool>(); }

double ProbabilityOf(const json& c) { return ToDouble(ParseRational(StrOf(c, "p"))); }

BackendPolicy PolicyOf(const json& c) {
  BackendPolicy policy;
  policy.polynomial_max_n = IntOf(c, "polynomial_max_n");
  policy.sparse_max_l = IntOf(c, "sparse_max_l");
  Require(policy.polynomial_max_n >= 1, "polynomial_max_n must be positive");
  Require(policy.sparse_max_l >= 1, "sparse_max_l must be positive");
  return policy;
}

const std::vector<Field> kPolicyFields = {
    {"polynomial_max_n", Kind::kInt, 28},
    {"sparse_max_l", Kind::kInt, kSparseMaxL},
    {"backend", Kind::kString, "auto"},
};

std::vector<Field> With(std::vector<Field> a, const std::vector<Field>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---------------------------------------------------------------- values

json LogRealJson(const LogReal& x) {
  json j;
  j["scientific"] = ToScientific(x);
  j["log"] = x.is_zero() ? json("-inf") : RealJson(x.log_abs());
  const double v = x.value();
  j["value"] = std::isfinite(v) ? RealJson(v) : json(nullptr);
  if (x.sign() < 0) j["sign"] = -1;
  return j;
}

json KsJson(const KSResult& r) {
  return {{"statistic", RealJson(r.statistic)},
          {"p_value", RealJson(r.p_value)},
          {"sample_size", r.sample_size},
          {"reference", r.reference}};
}

json RegimeJson(const RegimeReport& r) {
  return {{"ratio", RealJson(r.ratio)}, {"regime", RegimeName(r.regime)}, {"c", RealJson(r.c)},
          {"tol", RealJson(r.tol)}};
}

std::string Str(const BigInt& x) { return x.str(); }
std::string Str(const Rational& x) { return ToString(x); }
std::string Str(bool b) { return b ? "true" : "false"; }
std::string Str(double x) { return FormatReal(x); }
template <typename T>
std::string Num(T x) { return std::to_string(x); }

std::vector<std::pair<double, double>> Ecdf(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<std::pair<double, double>> out;
  const double m = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.emplace_back(xs[i], (i + 1) / m);
  return out;
}

std::vector<std::pair<double, double>> NormalCurve(const std::vector<double>& xs) {
  std::vector<std::pair<double, double>> out;
  if (xs.empty()) return out;
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  const double a = std::min(*lo, -4.0), b = std::max(*hi, 4.0);
  for (int i = 0; i <= 200; ++i) {
    const double x = a + (b - a) * i / 200.0;
    out.emplace_back(x, NormalCdf(x));
  }
  return out;
}

// ---------------------------------------------------------------- cache

uint64_t Fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Optional on-disk memo of expensive payloads, keyed by a hash of the
// command and its full input. Off unless MATCHSTAT_CACHE_DIR is set.
class PayloadCache {
 public:
  PayloadCache(const std::string& command, const std::string& key) {
    const char* dir = std::getenv("MATCHSTAT_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return;
    char name[64];
    std::snprintf(name, sizeof(name), "%s-%016llx.json", command.c_str(),
                  static_cast<unsigned long long>(Fnv1a(command + "\n" + key)));
    path_ = std::filesystem::path(dir) / name;
  }

  bool Load(json& payload) const {
    if (path_.empty()) return false;
    std::ifstream in(path_);
    if (!in) return false;
    try {
      payload = json::parse(in);
      return true;
    } catch (const json::exception&) {
      return false;
    }
  }

  void Store(const json& payload) const {
    if (path_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
    std::ofstream out(path_);
    if (out) out << payload.dump();
  }

 private:
  std::filesystem::path path_;
};

// ---------------------------------------------------------------- commands

struct Context {
  json config;
  int threads = 1;
  Report* report = nullptr;
  json& doc() { return report->document; }
};

void RunCount(Context& ctx) {
  const json& c = ctx.config;
  const std::string path = StrOf(c, "graph");
  Require(!path.empty(), "config key \"graph\" is required");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const Graph g = ParseGraph(text);
  const std::string kernel = StrOf(c, "kernel");
  Require(kernel == "memo" || kernel == "sparse", "kernel must be memo or sparse");

  PayloadCache cache("count", c.dump() + "\n" + text);
  json payload;
  if (!cache.Load(payload)) {
    payload = json::object();
    std::vector<BigInt> counts;
    if (kernel == "memo") {
      CountOptions options;
      options.vertex_cap = IntOf(c, "vertex_cap");
      MemoStats stats;
      counts = CountMatchings(g, options, &stats).counts();
      payload["memo"] = {{"hits", stats.hits}, {"misses", stats.misses}};
    } else {
      const int l = IntOf(c, "l");
      Require(l >= 0 && l <= kSparseMaxL, "the sparse kernel needs 0 <= l <= 4");
      for (int k = 0; k <= std::min(l, g.n() / 2); ++k) {
        counts.push_back(k == 0 ? BigInt(1) : CountLMatchingsSparse(g, k));
      }
    }
    json arr = json::array();
    for (const BigInt& x : counts) arr.push_back(Str(x));
    payload["counts"] = arr;
    cache.Store(payload);
  }
  for (auto& [k, v] : payload.items()) ctx.doc()[k] = v;
  ctx.doc()["n"] = g.n();
  ctx.doc()["edge_count"] = g.edge_count();
  ctx.report->table.header = {"k", "count"};
  for (std::size_t k = 0; k < payload["counts"].size(); ++k) {
    ctx.report->table.rows.push_back({Num(k), payload["counts"][k].get<std::string>()});
  }
}

void RunFormulas(Context& ctx) {
  const json& c = ctx.config;
  ModelParams params{IntOf(c, "n"), IntOf(c, "l"), ProbabilityOf(c), std::nullopt};
  const int64_t m = Int64Of(c, "m");
  if (m >= 0) params.m = m;
  params.Validate();
  const double delta = RealOf(c, "delta");
  const int n = params.n, l = params.l;
  const BigInt s = MatchingsComplete(n, l);
  json& d = ctx.doc();
  d["N"] = params.N();
  d["s"] = Str(s);
  d["lambda"] = LogRealJson(Lambda(params));
  d["sigma_bar"] = LogRealJson(SigmaBar(params));
  d["beta"] = RealJson(Beta(params));
  d["regime"] = RegimeJson(RegimeClassify(params, RealOf(c, "c"), RealOf(c, "tol")));

  Table& t = ctx.report->table;
  t.header = {"i", "z", "f_exact", "f_ratio", "shared_edge_ratio", "modal_shared_edge_ratio"};
  const std::vector<BigInt> f = FExactAll(n, l);
  const int gamma = static_cast<int>(std::floor(delta * l + 1e-12));
  json rows = json::array();
  for (int i = 0; i <= l && 2 * i < n; ++i) {
    json row = {{"i", i}, {"z", RealJson(ZOfI(n, l, i))}, {"f_exact", Str(f[i])}};
    std::vector<std::string> cells = {Num(i), FormatReal(ZOfI(n, l, i)), Str(f[i]), "", "", ""};
    if (i >= 1 && f[i - 1] != 0) {
      const double ratio = ToDouble(Rational(f[i], f[i - 1]));
      row["f_ratio"] = RealJson(ratio);
      cells[3] = FormatReal(ratio);
      if (i <= gamma) {
        row["shared_edge_ratio"] = RealJson(SharedEdgeRatio(n, l, i));
        row["modal_shared_edge_ratio"] = RealJson(ModalSharedEdgeRatio(n, l, i));
        cells[4] = FormatReal(SharedEdgeRatio(n, l, i));
        cells[5] = FormatReal(ModalSharedEdgeRatio(n, l, i));
      }
    }
    rows.push_back(row);
    t.rows.push_back(cells);
  }
  d["z_table"] = rows;

  if (params.m) {
    json mu;
    if (*params.m >= l) {
      mu["exact"] = LogRealJson(MuN(params.N(), *params.m, s, l));
      mu["tail_ratio"] = RealJson(GnmTailRatio(n, l, *params.m, delta));
    }
    if (*params.m >= 1) mu["approx"] = LogRealJson(MuNApprox(params.N(), *params.m, s, l));
    d["mu"] = mu;
  }
}

void RunPairs(Context& ctx) {
  const json& c = ctx.config;
  const int n = IntOf(c, "n"), l = IntOf(c, "l");
  Require(n >= 2 && l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  CensusOptions options;
  const std::string method = StrOf(c, "method");
  if (method == "double-loop") options.method = CensusMethod::kDoubleLoop;
  else if (method == "orbit") options.method = CensusMethod::kOrbit;
  else throw InvalidArgument("method must be double-loop or orbit");
  options.enumeration_cap = UintOf(c, "enumeration_cap");
  options.pair_cap = UintOf(c, "pair_cap");

  PayloadCache cache("pairs", c.dump());
  json payload;
  if (!cache.Load(payload)) {
    const PairCensusTable table = PairCensus(n, l, options);
    payload = json::object();
    json cells = json::array();
    for (int i = 0; i <= l; ++i) {
      for (int n2 = 0; n2 <= 2 * l; ++n2) {
        if (table.at(i, n2) != 0) cells.push_back({{"i", i}, {"n2", n2}, {"count", Str(table.at(i, n2))}});
      }
    }
    payload["table"] = cells;
    json marg = json::array();
    for (const BigInt& x : table.marginals()) marg.push_back(Str(x));
    payload["marginals"] = marg;
    payload["total"] = Str(table.total());
    cache.Store(payload);
  }
  json f = json::array();
  bool match = true;
  const std::vector<BigInt> fe = FExactAll(n, l);
  for (int i = 0; i <= l; ++i) {
    f.push_back(Str(fe[i]));
    match = match && payload["marginals"][i].get<std::string>() == Str(fe[i]);
  }
  for (auto& [k, v] : payload.items()) ctx.doc()[k] = v;
  ctx.doc()["f_exact"] = f;
  ctx.doc()["marginals_match_f_exact"] = match;
  const BigInt s = MatchingsComplete(n, l);
  ctx.doc()["total_equals_s_squared"] = payload["total"].get<std::string>() == Str(BigInt(s * s));
  ctx.report->table.header = {"i", "n2", "count"};
  for (const json& cell : payload["table"]) {
    ctx.report->table.rows.push_back(
        {Num(cell["i"].get<int>()), Num(cell["n2"].get<int>()), cell["count"].get<std::string>()});
  }
}

void RunTuples(Context& ctx) {
  const json& c = ctx.config;
  const int n = IntOf(c, "n"), l = IntOf(c, "l"), k = IntOf(c, "k");
  Require(n >= 2 && l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  Require(k >= 1, "k must be positive");
  TupleSumOptions options;
  options.tuple_cap = UintOf(c, "tuple_cap");
  options.enumeration_cap = UintOf(c, "enumeration_cap");
  const Rational p = ParseRational(StrOf(c, "p"));
  Require(p > 0 && p < 1, "p must satisfy 0 < p < 1");
  json& d = ctx.doc();
  Table& t = ctx.report->table;
  t.header = {"quantity", "value"};
  auto put = [&](const std::string& key, const std::string& value) {
    d["counts"][key] = value;
    t.rows.push_back({key, value});
  };

  const TupleCounts counts = CountTupleClasses(n, l, k, options);
  put("total", Str(counts.total));
  put("in_K", Str(counts.in_K));
  put("in_K_prime", Str(counts.in_K_prime));
  if (k % 2 == 1) {
    put("in_K_prime_flower", Str(counts.in_K_prime_flower));
    put("in_K_prime_chain", Str(counts.in_K_prime_chain));
  } else {
    const BigInt T = CountT(n, l, k, options);
    put("T", Str(T));
    const BigInt scaled = DoubleFactorial(k - 1) * T;
    put("double_factorial_times_T", Str(scaled));
    d["kprime_identity_holds"] = scaled == counts.in_K_prime;
  }
  if (BoolOf(c, "moment")) {
    const IntPoly poly = CentralMomentTuplePolynomial(n, l, k, options);
    const Rational value = poly.Evaluate(p);
    d["central_moment"] = {{"polynomial", poly.ToString()}, {"exact", Str(value)},
                           {"value", RealJson(ToDouble(value))}};
    t.rows.push_back({"central_moment", Str(value)});
    const ModelParams params{n, l, ToDouble(p), std::nullopt};
    if (k % 2 == 0) {
      const LogReal theo = LogReal::FromInt(DoubleFactorial(k - 1)) * SigmaBar(params).pow(k);
      d["central_moment"]["ratio_to_leading_term"] = RealJson((LogReal::FromRational(value) / theo).value());
    }
  }
  if (BoolOf(c, "degree_census")) {
    const DegreeCensus dc = ComputeDegreeCensus(n, l, options.enumeration_cap);
    d["degree_census"] = {{"D_min", Str(dc.D_min)}, {"D_max", Str(dc.D_max)},
                          {"d_min", Str(dc.d_min)}, {"d_max", Str(dc.d_max)},
                          {"l_delta1", Str(dc.l_delta1)},
                          {"l_delta1_minus_pairs_delta2", Str(dc.l_delta1_minus_pairs_delta2)},
                          {"d_lower", Str(dc.d_lower)},
                          {"bounds_hold", dc.bounds_hold},
                          {"single_delta2_lower_holds", dc.single_delta2_lower_holds}};
  }
}

std::vector<Transition> AllTransitions(int n, int l) {
  std::vector<Transition> out;
  for (int i = 1; i <= l; ++i) out.push_back({Transition::Kind::kSharedEdge, i, -1});
  for (int i = 0; i <= l; ++i) {
    for (int n2 = std::max({1, 2 * i, 4 * l - n}); n2 <= 2 * l; ++n2) {
      out.push_back({Transition::Kind::kN2, i, n2});
    }
  }
  return out;
}

json HistogramJson(const std::map<uint64_t, uint64_t>& h) {
  json arr = json::array();
  for (const auto& [moves, states] : h) arr.push_back({{"moves", moves}, {"states", states}});
  return arr;
}

void RunVerifySwitching(Context& ctx) {
  const json& c = ctx.config;
  const int n = IntOf(c, "n"), l = IntOf(c, "l");
  Require(n >= 2 && l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  SwitchingOptions options;
  options.enumeration_cap = UintOf(c, "enumeration_cap");
  options.pair_cap = UintOf(c, "pair_cap");
  options.check_closure = BoolOf(c, "check_closure");
  const std::string spec = StrOf(c, "transition");
  const std::vector<Transition> transitions =
      spec == "all" ? AllTransitions(n, l) : std::vector<Transition>{ParseTransition(spec)};
  const std::vector<BigInt> f = FExactAll(n, l);

  json list = json::array();
  bool all_equal = true, all_closed = true;
  Table& t = ctx.report->table;
  t.header = {"transition", "lhs", "rhs", "equal", "source_size", "target_size", "closure_ok", "formula_ok"};
  for (const Transition& tr : transitions) {
    const DoubleCountResult r = DoubleCountCheck(n, l, tr, options);
    json j = {{"transition", ToString(tr)},
              {"lhs", Str(r.lhs)},
              {"rhs", Str(r.rhs)},
              {"equal", r.equal()},
              {"source_size", Str(r.source_size)},
              {"target_size", Str(r.target_size)},
              {"closure_ok", r.closure_ok},
              {"fwd_histogram", HistogramJson(r.fwd_histogram)},
              {"inv_histogram", HistogramJson(r.inv_histogram)}};
    if (tr.kind == Transition::Kind::kN2) j["formula_ok"] = r.formula_ok;
    else j["class_sizes_match_f_exact"] = r.source_size == f[tr.i] && r.target_size == f[tr.i - 1];
    all_equal = all_equal && r.equal();
    all_closed = all_closed && r.closure_ok;
    list.push_back(j);
    t.rows.push_back({ToString(tr), Str(r.lhs), Str(r.rhs), Str(r.equal()), Str(r.source_size),
                      Str(r.target_size), Str(r.closure_ok),
                      tr.kind == Transition::Kind::kN2 ? Str(r.formula_ok) : ""});
  }
  ctx.doc()["transitions"] = list;
  ctx.doc()["equal"] = all_equal;
  ctx.doc()["closure_ok"] = all_closed;
}

McConfig McConfigOf(const json& c, int threads) {
  McConfig mc;
  mc.model = ParseModel(StrOf(c, "model"));
  mc.n = IntOf(c, "n");
  mc.l = IntOf(c, "l");
  mc.trials = UintOf(c, "trials");
  mc.seed = UintOf(c, "seed");
  mc.threads = threads;
  mc.backend = ParseBackend(StrOf(c, "backend"));
  mc.policy = PolicyOf(c);
  if (mc.model == Model::kGnp) {
    mc.p = ProbabilityOf(c);
  } else {
    mc.m = Int64Of(c, "m");
    Require(mc.m >= 0, "G(n, m) needs config key \"m\"");
  }
  return mc;
}

void RunMcDist(Context& ctx) {
  const json& c = ctx.config;
  const McConfig mc = McConfigOf(c, ctx.threads);
  json& d = ctx.doc();
  Table& t = ctx.report->table;
  SampleSet samples;
  std::vector<double> linear, logs;
  if (mc.model == Model::kGnp) {
    const ModelParams params{mc.n, mc.l, mc.p, std::nullopt};
    params.Validate();
    d["lambda"] = LogRealJson(Lambda(params));
    d["sigma_bar"] = LogRealJson(SigmaBar(params));
    d["beta"] = RealJson(Beta(params));
    if (mc.trials >= kMinKsSamples) {
      LimitLawConfig lc;
      lc.mc = mc;
      lc.c = RealOf(c, "c");
      lc.tol = RealOf(c, "tol");
      lc.strict_zero_exclusion = BoolOf(c, "strict_zero_exclusion");
      const LimitLawResult r = LimitLawExperiment(lc);
      samples = r.samples;
      d["regime"] = RegimeJson(r.regime);
      d["ks_normal"] = KsJson(r.normal);
      d["ks_lognormal"] = r.lognormal ? KsJson(*r.lognormal) : json(nullptr);
      d["excluded_fraction"] = RealJson(r.excluded_fraction);
    } else {
      samples = McSample(mc);
    }
    linear = LinearStatistics(samples);
    logs = LogStatistics(samples);
    d["skewness"] = RealJson(Skewness(linear));
  } else {
    samples = McSample(mc);
    const int64_t N = static_cast<int64_t>(EdgeSlots(mc.n));
    if (mc.m >= mc.l) {
      d["mu"] = LogRealJson(LogReal::FromRational(MuNExact(N, mc.m, MatchingsComplete(mc.n, mc.l), mc.l)));
      if (mc.trials >= 2) {
        const MeanRatio mr = GnmMeanRatio(samples);
        d["mean_ratio"] = {{"mean", RealJson(mr.mean)}, {"std_error", RealJson(mr.std_error)},
                           {"z", RealJson(mr.z)}};
      }
    }
  }
  d["backend"] = BackendName(samples.backend);
  d["zero_count"] = samples.zero_count;
  json counts = json::array();
  for (const BigInt& x : samples.counts) counts.push_back(Str(x));
  d["counts"] = counts;

  t.header = {"trial", "count"};
  if (mc.model == Model::kGnp) t.header.insert(t.header.end(), {"linear", "log"});
  std::size_t log_index = 0;
  for (std::size_t i = 0; i < samples.counts.size(); ++i) {
    std::vector<std::string> row = {Num(i), Str(samples.counts[i])};
    if (mc.model == Model::kGnp) {
      row.push_back(FormatReal(linear[i]));
      row.push_back(samples.counts[i] > 0 ? FormatReal(logs[log_index++]) : "");
    }
    t.rows.push_back(row);
  }
  if (!linear.empty()) {
    ctx.report->plots.push_back({"ecdf_linear", Ecdf(linear)});
    ctx.report->plots.push_back({"ecdf_log", Ecdf(logs)});
    ctx.report->plots.push_back({"normal_cdf", NormalCurve(linear)});
  }
}

void RunMoments(Context& ctx) {
  const json& c = ctx.config;
  MomentConfig mc;
  mc.n = IntOf(c, "n");
  mc.l = IntOf(c, "l");
  mc.p = StrOf(c, "p");
  mc.k_max = IntOf(c, "k_max");
  mc.source = ParseMomentSource(StrOf(c, "source"));
  mc.trials = UintOf(c, "trials");
  mc.seed = UintOf(c, "seed");
  mc.threads = ctx.threads;
  mc.policy = PolicyOf(c);
  Require(mc.k_max <= 12, "k_max must be at most 12");
  const MomentReport report = BuildMomentReport(mc);
  json rows = json::array();
  Table& t = ctx.report->table;
  t.header = {"k", "measured", "measured_exact", "theoretical", "ratio", "std_error"};
  for (const MomentRow& r : report.rows) {
    json j = {{"k", r.k}, {"measured", LogRealJson(r.measured)}, {"theoretical", LogRealJson(r.theoretical)},
              {"ratio", RealJson(r.ratio)}, {"kind", r.k % 2 == 0 ? "ratio" : "abs_over_sigma_pow_k"}};
    if (r.measured_exact) j["measured_exact"] = Str(*r.measured_exact);
    if (r.std_error) j["std_error"] = RealJson(*r.std_error);
    rows.push_back(j);
    t.rows.push_back({Num(r.k), ToScientific(r.measured), r.measured_exact ? Str(*r.measured_exact) : "",
                      ToScientific(r.theoretical), FormatReal(r.ratio),
                      r.std_error ? FormatReal(*r.std_error) : ""});
    ctx.report->plots.resize(1);
    ctx.report->plots[0].name = "ratio_by_k";
    ctx.report->plots[0].points.emplace_back(r.k, r.ratio);
  }
  ctx.doc()["moments"] = rows;
  ctx.doc()["source"] = MomentSourceName(report.source);
}

void RunTransitionScan(Context& ctx) {
  const json& c = ctx.config;
  ScanConfig sc;
  sc.n = IntOf(c, "n");
  sc.p = ProbabilityOf(c);
  sc.l_min = IntOf(c, "l_min");
  sc.l_max = IntOf(c, "l_max");
  if (sc.l_max < 0) sc.l_max = sc.n / 2;
  sc.trials = UintOf(c, "trials");
  sc.seed = UintOf(c, "seed");
  sc.threads = ctx.threads;
  sc.c = RealOf(c, "c");
  sc.tol = RealOf(c, "tol");
  sc.policy = PolicyOf(c);
  const std::vector<ScanRow> rows = TransitionScan(sc);
  json list = json::array();
  Table& t = ctx.report->table;
  t.header = {"l", "ratio", "regime", "skewness", "ks_normal", "ks_normal_p", "ks_lognormal",
              "ks_lognormal_p", "zero_count", "backend"};
  PlotSeries ks_n{"ks_normal", {}}, ks_l{"ks_lognormal", {}}, skew{"skewness", {}};
  for (const ScanRow& r : rows) {
    list.push_back({{"l", r.l}, {"regime", RegimeJson(r.regime)}, {"skewness", RealJson(r.skewness)},
                    {"ks_normal", KsJson(r.normal)},
                    {"ks_lognormal", r.lognormal ? KsJson(*r.lognormal) : json(nullptr)},
                    {"zero_count", r.zero_count}, {"backend", r.backend}});
    t.rows.push_back({Num(r.l), FormatReal(r.regime.ratio), RegimeName(r.regime.regime), FormatReal(r.skewness),
                      FormatReal(r.normal.statistic), FormatReal(r.normal.p_value),
                      r.lognormal ? FormatReal(r.lognormal->statistic) : "",
                      r.lognormal ? FormatReal(r.lognormal->p_value) : "", Num(r.zero_count), r.backend});
    ks_n.points.emplace_back(r.l, r.normal.statistic);
    if (r.lognormal) ks_l.points.emplace_back(r.l, r.lognormal->statistic);
    skew.points.emplace_back(r.l, r.skewness);
  }
  ctx.doc()["rows"] = list;
  ctx.report->plots = {ks_n, ks_l, skew};
}

void RunExactDist(Context& ctx) {
  const json& c = ctx.config;
  const int n = IntOf(c, "n"), l = IntOf(c, "l");
  const Rational p = ParseRational(StrOf(c, "p"));
  const ExactDistribution dist(n, l, p, ctx.threads);
  json& d = ctx.doc();
  json pmf = json::array();
  Table& t = ctx.report->table;
  t.header = {"x", "probability", "probability_value"};
  PlotSeries series{"pmf", {}};
  for (const auto& [x, prob] : dist.pmf()) {
    pmf.push_back({{"x", Num(x)}, {"probability", Str(prob)}, {"value", RealJson(ToDouble(prob))}});
    t.rows.push_back({Num(x), Str(prob), FormatReal(ToDouble(prob))});
    series.points.emplace_back(static_cast<double>(x), ToDouble(prob));
  }
  ctx.report->plots.push_back(series);
  d["pmf"] = pmf;
  d["total_probability"] = Str(dist.TotalProbability());
  const Rational mean = dist.Mean();
  d["mean"] = Str(mean);
  d["lambda"] = Str(LambdaExact(n, l, p));
  d["mean_equals_lambda"] = mean == LambdaExact(n, l, p);
  d["variance"] = Str(dist.CentralMoment(2));
  const int64_t m = Int64Of(c, "m");
  if (m >= 0) {
    const int64_t N = static_cast<int64_t>(EdgeSlots(n));
    Require(m <= N, "m must satisfy 0 <= m <= C(n,2)");
    d["gnm_mean"] = Str(dist.GnmMean(m));
    if (m >= l) {
      const Rational mu = MuNExact(N, m, MatchingsComplete(n, l), l);
      d["mu"] = Str(mu);
      d["gnm_mean_equals_mu"] = dist.GnmMean(m) == mu;
    }
  }
}

void RunSample(Context& ctx) {
  const json& c = ctx.config;
  const Model model = ParseModel(StrOf(c, "model"));
  const int n = IntOf(c, "n");
  Require(n >= 1, "n must be positive");
  const SeedSpec spec{UintOf(c, "seed"), UintOf(c, "stream")};
  Graph g;
  if (model == Model::kGnp) {
    const double p = ProbabilityOf(c);
    Require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    g = SampleGnp(n, p, spec);
  } else {
    const int64_t m = Int64Of(c, "m");
    Require(m >= 0 && static_cast<std::size_t>(m) <= EdgeSlots(n), "m must satisfy 0 <= m <= C(n,2)");
    g = SampleGnm(n, static_cast<std::size_t>(m), spec);
  }
  json edges = json::array();
  Table& t = ctx.report->table;
  t.header = {"u", "v"};
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.v});
    t.rows.push_back({Num(e.u), Num(e.v)});
  }
  ctx.doc()["n"] = n;
  ctx.doc()["edge_count"] = g.edge_count();
  ctx.doc()["edges"] = edges;
  ctx.report->graph_text = FormatGraph(g);
}

struct Command {
  std::vector<Field> fields;
  std::function<void(Context&)> run;
};

const std::map<std::string, Command>& Registry() {
  static const std::map<std::string, Command> registry = [] {
    const json req = nullptr;
    std::map<std::string, Command> r;
    r["count"] = {{{"graph", Kind::kString, req}, {"kernel", Kind::kString, "memo"},
                   {"vertex_cap", Kind::kInt, 28}, {"l", Kind::kInt, kSparseMaxL}},
                  RunCount};
    r["formulas"] = {{{"n", Kind::kInt, req}, {"l", Kind::kInt, req}, {"p", Kind::kText, req},
                      {"m", Kind::kInt, -1}, {"c", Kind::kReal, 1.0}, {"tol", Kind::kReal, 0.1},
                      {"delta", Kind::kReal, kDefaultDelta}},
                     RunFormulas};
    r["pairs"] = {{{"n", Kind::kInt, req}, {"l", Kind::kInt, req}, {"method", Kind::kString, "double-loop"},
                   {"enumeration_cap", Kind::kInt, kDefaultEnumerationCap},
                   {"pair_cap", Kind::kInt, kDefaultPairCap}},
                  RunPairs};
    r["tuples"] = {{{"n", Kind::kInt, req}, {"l", Kind::kInt, req}, {"k", Kind::kInt, req},
                    {"p", Kind::kText, "1/2"}, {"moment", Kind::kBool, true},
                    {"degree_census", Kind::kBool, false},
                    {"tuple_cap", Kind::kInt, kDefaultTupleCap},
                    {"enumeration_cap", Kind::kInt, kDefaultEnumerationCap}},
                   RunTuples};
    r["verify-switching"] = {{{"n", Kind::kInt, req}, {"l", Kind::kInt, req},
                              {"transition", Kind::kString, "all"}, {"check_closure", Kind::kBool, true},
                              {"enumeration_cap", Kind::kInt, kDefaultEnumerationCap},
                              {"pair_cap", Kind::kInt, SwitchingOptions{}.pair_cap}},
                             RunVerifySwitching};
    r["mc-dist"] = {With({{"model", Kind::kString, "gnp"}, {"n", Kind::kInt, req}, {"l", Kind::kInt, req},
                          {"p", Kind::kText, "0"}, {"m", Kind::kInt, -1}, {"trials", Kind::kInt, 1000},
                          {"seed", Kind::kInt, 0}, {"c", Kind::kReal, 1.0}, {"tol", Kind::kReal, 0.1},
                          {"strict_zero_exclusion", Kind::kBool, true}},
                         kPolicyFields),
                    RunMcDist};
    r["moments"] = {With({{"n", Kind::kInt, req}, {"l", Kind::kInt, req}, {"p", Kind::kText, req},
                          {"k_max", Kind::kInt, 4}, {"source", Kind::kString, "exact"},
                          {"trials", Kind::kInt, 0}, {"seed", Kind::kInt, 0}},
                         kPolicyFields),
                    RunMoments};
    r["transition-scan"] = {With({{"n", Kind::kInt, req}, {"p", Kind::kText, req}, {"l_min", Kind::kInt, 1},
                                  {"l_max", Kind::kInt, -1}, {"trials", Kind::kInt, 500},
                                  {"seed", Kind::kInt, 0}, {"c", Kind::kReal, 1.0}, {"tol", Kind::kReal, 0.1}},
                                 kPolicyFields),
                            RunTransitionScan};
    r["exact-dist"] = {{{"n", Kind::kInt, req}, {"l", Kind::kInt, req}, {"p", Kind::kText, "1/2"},
                        {"m", Kind::kInt, -1}},
                       RunExactDist};
    r["sample"] = {{{"model", Kind::kString, "gnp"}, {"n", Kind::kInt, req}, {"p", Kind::kText, "1/2"},
                    {"m", Kind::kInt, -1}, {"seed", Kind::kInt, 0}, {"stream", Kind::kInt, 0}},
                   RunSample};
    return r;
  }();
  return registry;
}

json MetaJson() {
  json modules = json::object();
  for (const char* m : {"graph-core", "match-count", "formulas", "pair-census", "switch-engine",
                        "distribution-lab", "cli"}) {
    modules[m] = MATCHSTAT_VERSION;
  }
  return {{"library", "matchstat"}, {"version", MATCHSTAT_VERSION}, {"modules", modules}};
}

std::string CsvCell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string HeaderComments(const Report& r) {
  return "# command: " + r.command + "\n# config: " + r.document.at("config").dump() +
         "\n# meta: " + r.document.at("meta").dump() + "\n";
}

}  // namespace

std::vector<std::string> CommandNames() {
  std::vector<std::string> names;
  for (const auto& [name, cmd] : Registry()) names.push_back(name);
  return names;
}

Report RunCommand(const std::string& command, const json& config) {
  const auto it = Registry().find(command);
  if (it == Registry().end()) throw InvalidArgument("unknown command \"" + command + "\"");
  const Resolved resolved = Resolve(it->second.fields, config.is_null() ? json::object() : config);
  Report report;
  report.command = command;
  report.document = json::object();
  report.document["command"] = command;
  report.document["config"] = resolved.config;
  report.document["meta"] = MetaJson();
  Context ctx{resolved.config, resolved.threads, &report};
  it->second.run(ctx);
  return report;
}

std::string RenderJson(const Report& r) { return r.document.dump(2) + "\n"; }

std::string RenderCsv(const Report& r) {
  std::string out = HeaderComments(r);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += CsvCell(cells[i]);
    }
    out += '\n';
  };
  line(r.table.header);
  for (const auto& row : r.table.rows) line(row);
  return out;
}

std::string RenderPlotData(const Report& r) {
  std::string out = HeaderComments(r);
  for (const PlotSeries& s : r.plots) {
    out += "\n# series: " + s.name + "\nx,y\n";
    for (const auto& [x, y] : s.points) out += FormatReal(x) + "," + FormatReal(y) + "\n";
  }
  return out;
}

}  // namespace matchstat
