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

#include "matchstat/switching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "matchstat/errors.hpp"
#include "matchstat/match_count.hpp"

namespace matchstat {

namespace {

int SpanOf(const MatchingPair& g) {
  return std::max(g.first.max_vertex(), g.second.max_vertex()) + 1;
}

Matching Replace(const Matching& m, std::initializer_list<Edge> drop, std::initializer_list<Edge> add) {
  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) {
    bool dropped = false;
    for (const Edge& d : drop) dropped = dropped || Edge::Of(d.u, d.v) == e;
    if (!dropped) edges.push_back(e);
  }
  for (const Edge& a : add) edges.push_back(Edge::Of(a.u, a.v));
  return Matching(std::move(edges));
}

std::string EdgeText(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

std::string MoveKindName(MoveKind kind) {
  switch (kind) {
    case MoveKind::kSharedEdgeFwd: return "shared-edge-fwd";
    case MoveKind::kSharedEdgeInv: return "shared-edge-inv";
    case MoveKind::kN2Fwd: return "n2-fwd";
    case MoveKind::kN2Inv: return "n2-inv";
  }
  return "unknown";
}

std::vector<SwitchMove> SharedEdgeFwdMoves(const MatchingPair& g) {
  const Matching& M = g.first;
  const Matching& Mp = g.second;
  Require(M.size() == Mp.size(), "pair members differ in size");
  std::vector<SwitchMove> moves;
  for (const Edge& x : M.edges()) {
    if (!Mp.contains(x)) continue;
    for (const Edge& y : M.edges()) {
      if (Mp.contains(y)) continue;
      for (const Edge& z : Mp.edges()) {
        if (M.contains(z) || !y.disjoint_from(z)) continue;
        for (int ox = 0; ox < 2; ++ox) {
          for (int oy = 0; oy < 2; ++oy) {
            for (int oz = 0; oz < 2; ++oz) {
              SwitchMove mv;
              mv.kind = MoveKind::kSharedEdgeFwd;
              mv.labels = {ox ? x.v : x.u, ox ? x.u : x.v, oy ? y.v : y.u,
                           oy ? y.u : y.v, oz ? z.v : z.u, oz ? z.u : z.v};
              moves.push_back(mv);
            }
          }
        }
      }
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

std::vector<SwitchMove> SharedEdgeInvMoves(const MatchingPair& g) {
  const Matching& Q = g.first;
  const Matching& Qp = g.second;
  Require(Q.size() == Qp.size(), "pair members differ in size");
  const int n = SpanOf(g);
  if (n <= 0) return {};
  const std::vector<int> pq = Q.partners(n);
  const std::vector<int> pqp = Qp.partners(n);
  std::vector<SwitchMove> moves;
  for (int v1 = 0; v1 < n; ++v1) {
    if (pq[v1] < 0 || pqp[v1] < 0 || pq[v1] == pqp[v1]) continue;
    const int v3 = pq[v1], v5 = pqp[v1];
    for (int v2 = 0; v2 < n; ++v2) {
      if (v2 == v1 || pq[v2] < 0 || pqp[v2] < 0 || pq[v2] == pqp[v2]) continue;
      const int v4 = pq[v2], v6 = pqp[v2];
      const std::array<int, 6> labels = {v1, v2, v3, v4, v5, v6};
      std::array<int, 6> sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      if (Qp.contains(Edge::Of(v3, v4)) || Q.contains(Edge::Of(v5, v6))) continue;
      moves.push_back({MoveKind::kSharedEdgeInv, labels});
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

std::vector<SwitchMove> N2FwdMoves(const MatchingPair& g, int n) {
  const std::vector<int> pm = g.first.partners(n);
  const std::vector<int> pmp = g.second.partners(n);
  std::vector<SwitchMove> moves;
  for (int v = 0; v < n; ++v) {
    if (pm[v] < 0 || pmp[v] < 0 || pm[v] == pmp[v]) continue;
    for (int u = 0; u < n; ++u) {
      if (pm[u] >= 0 || pmp[u] >= 0) continue;
      moves.push_back({MoveKind::kN2Fwd, {v, u, pm[v], pmp[v], 0, 0}});
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

std::vector<SwitchMove> N2InvMoves(const MatchingPair& g, int n) {
  const std::vector<int> pm = g.first.partners(n);
  const std::vector<int> pmp = g.second.partners(n);
  std::vector<SwitchMove> moves;
  for (int u = 0; u < n; ++u) {
    if (pm[u] < 0 || pmp[u] >= 0) continue;
    for (int v = 0; v < n; ++v) {
      if (pmp[v] < 0 || pm[v] >= 0) continue;
      if (pm[u] == pmp[v]) continue;
      moves.push_back({MoveKind::kN2Inv, {u, v, pm[u], pmp[v], 0, 0}});
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

MatchingPair ApplyMove(const MatchingPair& g, const SwitchMove& mv) {
  const auto& L = mv.labels;
  switch (mv.kind) {
    case MoveKind::kSharedEdgeFwd:
      return {Replace(g.first, {{L[0], L[1]}, {L[2], L[3]}}, {{L[0], L[2]}, {L[1], L[3]}}),
              Replace(g.second, {{L[0], L[1]}, {L[4], L[5]}}, {{L[0], L[4]}, {L[1], L[5]}})};
    case MoveKind::kSharedEdgeInv:
      return {Replace(g.first, {{L[2], L[0]}, {L[3], L[1]}}, {{L[2], L[3]}, {L[0], L[1]}}),
              Replace(g.second, {{L[0], L[4]}, {L[1], L[5]}}, {{L[0], L[1]}, {L[4], L[5]}})};
    case MoveKind::kN2Fwd:
      // labels (v, u, a, b): a v leaves the first matching, a u joins it.
      return {Replace(g.first, {{L[2], L[0]}}, {{L[2], L[1]}}), g.second};
    case MoveKind::kN2Inv:
      // labels (u, v, a, b): a u leaves the first matching, a v joins it.
      return {Replace(g.first, {{L[2], L[0]}}, {{L[2], L[1]}}), g.second};
  }
  throw InvalidArgument("unknown move kind");
}

Transition ParseTransition(const std::string& text) {
  auto fail = [&]() -> Transition {
    throw InvalidArgument("bad transition \"" + text + "\"; expected i:<i>-<i-1> or n2:<i>:<n2>-<n2-1>");
  };
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) fail();
    return std::stoi(s);
  };
  Transition t;
  if (text.rfind("i:", 0) == 0) {
    const std::string body = text.substr(2);
    const auto dash = body.find('-');
    if (dash == std::string::npos) return fail();
    const int from = parse_int(body.substr(0, dash));
    const int to = parse_int(body.substr(dash + 1));
    if (to != from - 1) return fail();
    t.kind = Transition::Kind::kSharedEdge;
    t.i = from;
    return t;
  }
  if (text.rfind("n2:", 0) == 0) {
    const std::string body = text.substr(3);
    const auto colon = body.find(':');
    if (colon == std::string::npos) return fail();
    const std::string range = body.substr(colon + 1);
    const auto dash = range.find('-');
    if (dash == std::string::npos) return fail();
    t.kind = Transition::Kind::kN2;
    t.i = parse_int(body.substr(0, colon));
    t.n2_from = parse_int(range.substr(0, dash));
    if (parse_int(range.substr(dash + 1)) != t.n2_from - 1) return fail();
    return t;
  }
  return fail();
}

std::string ToString(const Transition& t) {
  if (t.kind == Transition::Kind::kSharedEdge) {
    return "i:" + std::to_string(t.i) + "-" + std::to_string(t.i - 1);
  }
  return "n2:" + std::to_string(t.i) + ":" + std::to_string(t.n2_from) + "-" +
         std::to_string(t.n2_from - 1);
}

DoubleCountResult DoubleCountCheck(int n, int l, const Transition& t, const SwitchingOptions& options) {
  Require(l >= 1 && 2 * l <= n, "need 1 <= l <= floor(n/2)");
  const bool shared = t.kind == Transition::Kind::kSharedEdge;
  if (shared) Require(t.i >= 1 && t.i <= l, "shared-edge transitions need 1 <= i <= l");
  else Require(t.i >= 0 && t.i <= l && t.n2_from >= 1 && t.n2_from <= 2 * l,
               "n2 transitions need 0 <= i <= l and 1 <= n2 <= 2l");
  const BigInt s = MatchingsComplete(n, l);
  if (s * s > options.pair_cap) {
    throw CapExceeded("double counting needs " + BigInt(s * s).str() + " pairs, above the cap of " +
                      std::to_string(options.pair_cap));
  }
  const std::vector<Matching> all = EnumerateMatchings(n, l, options.enumeration_cap);

  const PairClass source = shared ? PairClass{t.i, -1} : PairClass{t.i, t.n2_from};
  const PairClass target = shared ? PairClass{t.i - 1, -1} : PairClass{t.i, t.n2_from - 1};
  auto in_class = [](const PairProfile& pr, const PairClass& c) {
    return pr.shared_edges == c.i && (c.n2 < 0 || pr.shared_vertices == c.n2);
  };

  DoubleCountResult r;
  r.transition = t;
  r.lhs = r.rhs = r.source_size = r.target_size = 0;
  uint64_t lhs = 0, rhs = 0, source_size = 0, target_size = 0;
  for (const Matching& a : all) {
    for (const Matching& b : all) {
      const PairProfile pr = ComputePairProfile(a, b, n);
      const bool is_source = in_class(pr, source);
      const bool is_target = in_class(pr, target);
      if (!is_source && !is_target) continue;
      const MatchingPair g{a, b};
      if (is_source) {
        ++source_size;
        const auto moves = shared ? SharedEdgeFwdMoves(g) : N2FwdMoves(g, n);
        lhs += moves.size();
        ++r.fwd_histogram[moves.size()];
        if (!shared) {
          const auto expected = static_cast<std::size_t>(pr.shared_vertices - 2 * pr.shared_edges) *
                                static_cast<std::size_t>(pr.free_vertices);
          r.formula_ok = r.formula_ok && moves.size() == expected;
        }
        if (options.check_closure) {
          for (const SwitchMove& mv : moves) {
            const MatchingPair h = ApplyMove(g, mv);
            r.closure_ok = r.closure_ok && in_class(ComputePairProfile(h.first, h.second, n), target);
          }
        }
      }
      if (is_target) {
        ++target_size;
        const auto moves = shared ? SharedEdgeInvMoves(g) : N2InvMoves(g, n);
        rhs += moves.size();
        ++r.inv_histogram[moves.size()];
        if (options.check_closure) {
          for (const SwitchMove& mv : moves) {
            const MatchingPair h = ApplyMove(g, mv);
            r.closure_ok = r.closure_ok && in_class(ComputePairProfile(h.first, h.second, n), source);
          }
        }
      }
    }
  }
  r.lhs = lhs;
  r.rhs = rhs;
  r.source_size = source_size;
  r.target_size = target_size;
  return r;
}

std::vector<Matching> SubcriticalForwardSwitch(const std::vector<Matching>& tuple,
                                               const SubcriticalChoices& choices, int n) {
  const int k = static_cast<int>(tuple.size());
  Require(k >= 2 && k % 2 == 0, "the forward switching needs an even k >= 2");
  const TupleClass tc = ClassifyTuple(tuple);
  Require(tc.in_K && !tc.in_K_prime, "the forward switching needs a tuple in K \\ K'");
  const int l = tc.l;
  for (const Matching& m : tuple) Require(m.max_vertex() < n, "tuple vertex out of range");

  // Step 1: drop every edge a member shares with another member.
  std::vector<std::vector<Edge>> reduced(k);
  std::vector<int> shared_count(k, 0);
  for (int j = 0; j < k; ++j) {
    for (const Edge& e : tuple[j].edges()) {
      bool shared = false;
      for (int t = 0; t < k && !shared; ++t) shared = t != j && tuple[t].contains(e);
      if (shared) ++shared_count[j];
      else reduced[j].push_back(e);
    }
  }

  // Step 2: top each member up to l-1 edges with fresh edges.
  Require(static_cast<int>(choices.a_edges.size()) == k, "step 2: need one edge list per member");
  std::set<Edge> forbidden;
  for (const auto& r : reduced) forbidden.insert(r.begin(), r.end());
  std::vector<std::vector<Edge>> partial = reduced;
  for (int j = 0; j < k; ++j) {
    const auto& adds = choices.a_edges[j];
    if (static_cast<int>(adds.size()) != shared_count[j] - 1) {
      throw InvalidArgument("step 2: member " + std::to_string(j) + " needs " +
                            std::to_string(shared_count[j] - 1) + " added edges, got " +
                            std::to_string(adds.size()));
    }
    for (const Edge& raw : adds) {
      Require(raw.u != raw.v && raw.u >= 0 && raw.v >= 0 && raw.u < n && raw.v < n,
              "step 2: edge endpoints must be distinct vertices below n");
      const Edge a = Edge::Of(raw.u, raw.v);
      if (forbidden.count(a)) {
        throw InvalidArgument("step 2: edge " + EdgeText(a) +
                              " is already used by a reduced member or an earlier added edge");
      }
      for (const Edge& e : partial[j]) {
        if (!e.disjoint_from(a)) {
          throw InvalidArgument("step 2: edge " + EdgeText(a) + " meets edge " + EdgeText(e) +
                                " of member " + std::to_string(j));
        }
      }
      partial[j].push_back(a);
      forbidden.insert(a);
    }
  }

  // Step 3: a perfect matching of the positions.
  Require(static_cast<int>(choices.pairing.size()) == k / 2,
          "step 3: the pairing must have k/2 pairs");
  std::vector<int> seen(k, 0);
  for (const auto& [a, b] : choices.pairing) {
    Require(a >= 0 && b >= 0 && a < k && b < k && a != b, "step 3: pair positions out of range");
    ++seen[a];
    ++seen[b];
  }
  Require(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }),
          "step 3: the pairing must cover every position exactly once");

  // Step 4: one new shared edge per pair.
  Require(choices.f_edges.size() == choices.pairing.size(), "step 4: need one shared edge per pair");
  std::set<Edge> used;
  for (const auto& p : partial) used.insert(p.begin(), p.end());
  for (std::size_t r = 0; r < choices.pairing.size(); ++r) {
    const Edge raw = choices.f_edges[r];
    Require(raw.u != raw.v && raw.u >= 0 && raw.v >= 0 && raw.u < n && raw.v < n,
            "step 4: edge endpoints must be distinct vertices below n");
    const Edge f = Edge::Of(raw.u, raw.v);
    if (used.count(f)) {
      throw InvalidArgument("step 4: edge " + EdgeText(f) + " is already in a member or chosen earlier");
    }
    for (int j : {choices.pairing[r].first, choices.pairing[r].second}) {
      for (const Edge& e : partial[j]) {
        if (!e.disjoint_from(f)) {
          throw InvalidArgument("step 4: edge " + EdgeText(f) + " meets edge " + EdgeText(e) +
                                " of member " + std::to_string(j));
        }
      }
    }
    partial[choices.pairing[r].first].push_back(f);
    partial[choices.pairing[r].second].push_back(f);
    used.insert(f);
  }

  // Step 5: the new tuple.
  std::vector<Matching> out;
  out.reserve(k);
  for (auto& p : partial) {
    Require(static_cast<int>(p.size()) == l, "step 5: a member did not end with l edges");
    out.emplace_back(std::move(p));
  }
  const TupleClass result = ClassifyTuple(out);
  Require(result.in_K_prime, "step 5: the result is not in K'");
  return out;
}

bool InXSet(const std::vector<int>& x, int l, int k) {
  if (static_cast<int>(x.size()) != k || k < 1) return false;
  long total = 0, heavy = 0;
  for (int j = 1; j <= k; ++j) {
    if (x[j - 1] < 0) return false;
    total += static_cast<long>(j) * x[j - 1];
    if (j >= 2) heavy += static_cast<long>(j) * x[j - 1];
  }
  return total == static_cast<long>(k) * l && heavy >= k;
}

namespace {

void RequireX(const std::vector<int>& x, int l, int k) {
  Require(InXSet(x, l, k), "x-vector is not in X");
}

double LogHalfSlots(int n) { return std::log(static_cast<double>(n) * (n - 1) / 4.0); }

}  // namespace

LogReal LowerSwitchBound(const std::vector<int>& x, int n, int l, int k) {
  RequireX(x, l, k);
  const double exponent = k % 2 == 0 ? static_cast<double>(k) * l - x[0] - k / 2.0
                                     : static_cast<double>(k) * l - x[0] - (k + 1) / 2.0;
  return LogReal::FromLog(exponent * LogHalfSlots(n));
}

double SwitchBeta(const std::vector<int>& x, int l, int k) {
  RequireX(x, l, k);
  const long w = static_cast<long>(k) * l - x[0];
  const long part = w / k;
  const double log_value = LogOf(Factorial(w)) - k * LogOf(Factorial(part));
  return std::exp(log_value / static_cast<double>(w));
}

LogReal UpperSwitchBound(const std::vector<int>& x, int n, int l, int k) {
  RequireX(x, l, k);
  const double w = static_cast<double>(k) * l - x[0];
  const double l_exponent = k % 2 == 0 ? w - k : w - k - 1;
  long heavy_edges = 0;
  for (int j = 2; j <= k; ++j) heavy_edges += x[j - 1];
  const double slots = static_cast<double>(n) * (n - 1) / 2.0;
  const double log_value = (k - 1) * std::log(w) + l_exponent * std::log(static_cast<double>(l)) +
                           heavy_edges * std::log(slots) + w * std::log(SwitchBeta(x, l, k));
  return LogReal::FromLog(log_value);
}

LogReal PRatio(const std::vector<int>& x, int l, double p, int k) {
  RequireX(x, l, k);
  Require(p > 0.0 && p < 1.0, "p must satisfy 0 < p < 1");
  long total = 0;
  for (int v : x) total += v;
  const double half = k / 2.0;
  const double log_value = total * std::log(p) - (static_cast<double>(k) * l - half) * std::log(p) -
                           half * std::log1p(-p);
  return LogReal::FromLog(log_value);
}

}  // namespace matchstat
