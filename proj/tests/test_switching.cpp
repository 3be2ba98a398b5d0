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

#include <map>

#include "matchstat/errors.hpp"
#include "matchstat/pair_census.hpp"
#include "matchstat/switching.hpp"

using namespace matchstat;

namespace {

Matching M(std::initializer_list<std::pair<int, int>> es) {
  std::vector<Edge> edges;
  for (auto [u, v] : es) edges.push_back(Edge::Of(u, v));
  return Matching(edges);
}

bool InClass(const MatchingPair& g, int n, int i, int n2) {
  const PairProfile pp = ComputePairProfile(g.first, g.second, n);
  return pp.shared_edges == i && (n2 < 0 || pp.shared_vertices == n2);
}

std::vector<Transition> AllTransitions(int l) {
  std::vector<Transition> out;
  for (int i = 1; i <= l; ++i) out.push_back({Transition::Kind::kSharedEdge, i, -1});
  for (int i = 0; i <= l; ++i)
    for (int n2 = 2 * i + 1; n2 <= 2 * l; ++n2) out.push_back({Transition::Kind::kN2, i, n2});
  return out;
}

// For every target state, the number of (source state, forward move) pairs
// that land on it. Each inverse move must undo exactly one of them.
std::map<MatchingPair, uint64_t> ForwardPreimages(int n, int l, const Transition& t) {
  const auto all = EnumerateMatchings(n, l);
  std::map<MatchingPair, uint64_t> hits;
  for (const Matching& a : all) {
    for (const Matching& b : all) {
      const MatchingPair g{a, b};
      const int n2 = t.kind == Transition::Kind::kN2 ? t.n2_from : -1;
      if (!InClass(g, n, t.i, n2)) continue;
      const auto moves = t.kind == Transition::Kind::kN2 ? N2FwdMoves(g, n) : SharedEdgeFwdMoves(g);
      for (const SwitchMove& mv : moves) ++hits[ApplyMove(g, mv)];
    }
  }
  return hits;
}

}  // namespace

TEST_SUITE("switching") {

TEST_CASE("shared-edge forward examples") {
  const MatchingPair g{M({{0, 1}, {2, 3}}), M({{0, 1}, {4, 5}})};
  const auto moves = SharedEdgeFwdMoves(g);
  CHECK(moves.size() == 8);
  CHECK(std::is_sorted(moves.begin(), moves.end()));
  for (const SwitchMove& mv : moves) CHECK(InClass(ApplyMove(g, mv), 6, 0, -1));
  CHECK(SharedEdgeFwdMoves({M({{0, 1}, {2, 3}}), M({{4, 5}, {0, 2}})}).empty());
  CHECK(SharedEdgeFwdMoves({M({{0, 1}}), M({{0, 1}})}).empty());
}

TEST_CASE("shared-edge inverse examples") {
  // n2 = 0 after removing nothing: no 2-paths through common vertices.
  CHECK(SharedEdgeInvMoves({M({{0, 1}, {2, 3}}), M({{4, 5}, {6, 7}})}).empty());
  CHECK(SharedEdgeInvMoves({M({{0, 1}, {2, 3}}), M({{0, 1}, {2, 3}})}).empty());
  const MatchingPair g{M({{0, 1}, {2, 3}}), M({{0, 2}, {1, 3}})};
  for (const SwitchMove& mv : SharedEdgeInvMoves(g)) CHECK(InClass(ApplyMove(g, mv), 6, 1, -1));
}

TEST_CASE("n2 move examples") {
  const MatchingPair g{M({{0, 1}, {2, 3}}), M({{0, 1}, {2, 4}})};
  const PairProfile pp = ComputePairProfile(g.first, g.second, 8);
  CHECK(pp.shared_vertices == 3);
  CHECK(pp.free_vertices == 3);
  const auto fwd = N2FwdMoves(g, 8);
  CHECK(fwd.size() == 3);
  for (const SwitchMove& mv : fwd) CHECK(InClass(ApplyMove(g, mv), 8, 1, 2));
  // Every shared vertex on a shared edge.
  CHECK(N2FwdMoves({M({{0, 1}, {2, 3}}), M({{0, 1}, {4, 5}})}, 8).empty());
  // No vertex covered by exactly one matching.
  CHECK(N2InvMoves({M({{0, 1}, {2, 3}}), M({{0, 2}, {1, 3}})}, 8).empty());
}

TEST_CASE("inverse moves match forward preimages") {
  struct Case { int n, l; Transition t; };
  const Case cases[] = {
      {6, 2, {Transition::Kind::kSharedEdge, 1, -1}},
      {7, 3, {Transition::Kind::kSharedEdge, 2, -1}},
      {6, 2, {Transition::Kind::kN2, 0, 2}},
      {7, 2, {Transition::Kind::kN2, 1, 3}},
      {8, 3, {Transition::Kind::kN2, 1, 4}},
  };
  for (const Case& c : cases) {
    CAPTURE(ToString(c.t));
    const auto hits = ForwardPreimages(c.n, c.l, c.t);
    const auto all = EnumerateMatchings(c.n, c.l);
    const int target_i = c.t.kind == Transition::Kind::kN2 ? c.t.i : c.t.i - 1;
    const int target_n2 = c.t.kind == Transition::Kind::kN2 ? c.t.n2_from - 1 : -1;
    for (const Matching& a : all) {
      for (const Matching& b : all) {
        const MatchingPair g{a, b};
        if (!InClass(g, c.n, target_i, target_n2)) continue;
        const auto inv = c.t.kind == Transition::Kind::kN2 ? N2InvMoves(g, c.n) : SharedEdgeInvMoves(g);
        const auto it = hits.find(g);
        REQUIRE(inv.size() == (it == hits.end() ? 0 : it->second));
        for (const SwitchMove& mv : inv) {
          const MatchingPair back = ApplyMove(g, mv);
          REQUIRE(InClass(back, c.n, c.t.i, c.t.kind == Transition::Kind::kN2 ? c.t.n2_from : -1));
        }
      }
    }
  }
}

TEST_CASE("double counting at every transition") {
  for (auto [n, l] : {std::pair{6, 2}, std::pair{7, 3}, std::pair{8, 3}}) {
    const PairCensusTable census = PairCensus(n, l);
    const auto f = census.marginals();
    for (const Transition& t : AllTransitions(l)) {
      CAPTURE(n);
      CAPTURE(ToString(t));
      const DoubleCountResult r = DoubleCountCheck(n, l, t);
      CHECK(r.equal());
      CHECK(r.closure_ok);
      CHECK(r.formula_ok);
      if (t.kind == Transition::Kind::kSharedEdge) {
        CHECK(r.source_size == f[t.i]);
        CHECK(r.target_size == f[t.i - 1]);
      } else {
        CHECK(r.source_size == census.at(t.i, t.n2_from));
        CHECK(r.target_size == census.at(t.i, t.n2_from - 1));
      }
      BigInt states = 0, moves = 0;
      for (const auto& [count, many] : r.fwd_histogram) {
        states += many;
        moves += BigInt(count) * many;
      }
      CHECK(states == r.source_size);
      CHECK(moves == r.lhs);
    }
  }
  // Empty source class.
  const DoubleCountResult empty = DoubleCountCheck(4, 2, {Transition::Kind::kN2, 0, 4});
  CHECK(empty.lhs == 0);
  CHECK(empty.rhs == 0);
  SwitchingOptions tight;
  tight.pair_cap = 100;
  CHECK_THROWS_AS(DoubleCountCheck(8, 3, {Transition::Kind::kSharedEdge, 1, -1}, tight), CapExceeded);
}

TEST_CASE("transition syntax") {
  const Transition a = ParseTransition("i:2-1");
  CHECK(a.kind == Transition::Kind::kSharedEdge);
  CHECK(a.i == 2);
  CHECK(ToString(a) == "i:2-1");
  const Transition b = ParseTransition("n2:1:4-3");
  CHECK(b.kind == Transition::Kind::kN2);
  CHECK(b.i == 1);
  CHECK(b.n2_from == 4);
  CHECK(ToString(b) == "n2:1:4-3");
  CHECK_THROWS_AS(ParseTransition("i:2-0"), InvalidArgument);
  CHECK_THROWS_AS(ParseTransition("n2:1:4-2"), InvalidArgument);
  CHECK_THROWS_AS(ParseTransition("bogus"), InvalidArgument);
}

TEST_CASE("subcritical forward switching") {
  const std::vector<Matching> tuple{M({{0, 1}, {2, 3}, {4, 5}}), M({{0, 1}, {2, 3}, {6, 7}})};
  const TupleClass before = ClassifyTuple(tuple);
  CHECK(before.x == std::vector<int>{2, 2});
  SubcriticalChoices ch;
  ch.a_edges = {{Edge::Of(8, 9)}, {Edge::Of(0, 2)}};
  ch.pairing = {{0, 1}};
  ch.f_edges = {Edge::Of(1, 3)};
  const auto out = SubcriticalForwardSwitch(tuple, ch, 10);
  const TupleClass after = ClassifyTuple(out);
  CHECK(after.in_K_prime);
  CHECK(after.components[0].tag == StructureTag::kKissingPair);
  CHECK(after.x[1] == 1);
  CHECK(after.x == std::vector<int>{4, 1});

  SubcriticalChoices bad = ch;
  bad.a_edges[0] = {Edge::Of(6, 7)};
  try {
    SubcriticalForwardSwitch(tuple, bad, 10);
    FAIL("expected a step 2 error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).rfind("step 2", 0) == 0);
  }
  bad = ch;
  bad.f_edges = {Edge::Of(4, 9)};
  CHECK_THROWS_AS(SubcriticalForwardSwitch(tuple, bad, 10), InvalidArgument);
  bad = ch;
  bad.pairing = {{0, 0}};
  CHECK_THROWS_AS(SubcriticalForwardSwitch(tuple, bad, 10), InvalidArgument);
  // Already a kissing pair.
  CHECK_THROWS_AS(SubcriticalForwardSwitch(out, ch, 10), InvalidArgument);
}

TEST_CASE("subcritical switching on k = 4") {
  // Two members sharing two edges and two sharing three; all four end up as
  // two kissing pairs.
  const std::vector<Matching> tuple{
      M({{0, 1}, {2, 3}, {4, 5}}), M({{0, 1}, {2, 3}, {6, 7}}),
      M({{8, 9}, {10, 11}, {12, 13}}), M({{8, 9}, {10, 11}, {12, 13}})};
  SubcriticalChoices ch;
  ch.a_edges = {{Edge::Of(14, 15)}, {Edge::Of(14, 15)}, {Edge::Of(0, 2), Edge::Of(4, 6)},
                {Edge::Of(1, 3), Edge::Of(5, 7)}};
  ch.pairing = {{0, 2}, {1, 3}};
  ch.f_edges = {Edge::Of(16, 17), Edge::Of(18, 19)};
  // 14-15 is reused by member 1 after member 0 added it.
  CHECK_THROWS_AS(SubcriticalForwardSwitch(tuple, ch, 20), InvalidArgument);
  ch.a_edges[1] = {Edge::Of(8, 10)};
  const TupleClass after = ClassifyTuple(SubcriticalForwardSwitch(tuple, ch, 20));
  CHECK(after.in_K_prime);
  CHECK(after.x[1] == 2);
  for (std::size_t j = 2; j < after.x.size(); ++j) CHECK(after.x[j] == 0);
}

TEST_CASE("switching bounds") {
  CHECK(InXSet({2, 2}, 3, 2));
  CHECK(InXSet({4, 1}, 3, 2));
  CHECK_FALSE(InXSet({6, 0}, 3, 2));
  CHECK_FALSE(InXSet({3, 1}, 3, 2));
  CHECK_FALSE(InXSet({2, 2}, 3, 3));
  for (int n : {10, 20, 50}) {
    const double half = n * (n - 1) / 4.0;
    CHECK(LowerSwitchBound({4, 1}, n, 3, 2).value() == doctest::Approx(half));
    const LogReal u = UpperSwitchBound({4, 1}, n, 3, 2);
    CHECK(std::isfinite(u.log_abs()));
    // (2)^1 3^0 C(n,2)^1 beta^2 with beta = (2!/(1!)^2)^(1/2).
    CHECK(u.value() == doctest::Approx(2.0 * (n * (n - 1) / 2.0) * 2.0));
  }
  CHECK(SwitchBeta({4, 1}, 3, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(PRatio({4, 1}, 3, 0.25, 2).value() == doctest::Approx(std::pow(0.25, 5) / (std::pow(0.25, 5) * 0.75)));
  CHECK_THROWS_AS(LowerSwitchBound({6, 0}, 10, 3, 2), InvalidArgument);
  // Odd k drops one more from the exponent.
  CHECK(LowerSwitchBound({6, 0, 1}, 10, 3, 3).log_abs() ==
        doctest::Approx((9 - 6 - 2) * std::log(22.5)));

  double previous = 0.0;
  for (int n = 10; n <= 200; n += 10) {
    const std::vector<int> x{2, 2};
    const double ratio =
        (UpperSwitchBound(x, n, 3, 2) * PRatio(x, 3, 0.5, 2) / LowerSwitchBound(x, n, 3, 2)).log_abs();
    if (n > 10) CHECK(ratio < previous);
    previous = ratio;
  }
}

}  // TEST_SUITE
