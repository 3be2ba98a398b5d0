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

#include "matchstat/errors.hpp"
#include "matchstat/graph.hpp"
#include "matchstat/match_count.hpp"
#include "oracles.hpp"

using namespace matchstat;

namespace {

oracle::EdgeList EdgesOf(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

CountVector Vec(int n, std::vector<int> xs) {
  std::vector<BigInt> v(xs.begin(), xs.end());
  return CountVector(n, v);
}

}  // namespace

TEST_SUITE("match_count") {

TEST_CASE("double factorial") {
  CHECK(DoubleFactorial(5) == 15);
  CHECK(DoubleFactorial(6) == 48);
  CHECK(DoubleFactorial(0) == 1);
  CHECK(DoubleFactorial(-1) == 1);
  CHECK_THROWS_AS(DoubleFactorial(-2), InvalidArgument);
}

TEST_CASE("matchings of complete graphs") {
  CHECK(MatchingsComplete(6, 3) == 15);
  CHECK(MatchingsComplete(4, 2) == 3);
  CHECK(MatchingsComplete(8, 2) == 210);
  CHECK(oracle::SubsetMatchings(oracle::AllPairs(8), 2) == 210);
  CHECK_THROWS_AS(MatchingsComplete(5, 3), InvalidArgument);
  for (int n = 1; n <= 30; ++n) {
    for (int l = 0; 2 * l <= n; ++l) CHECK(MatchingsComplete(n, l) == oracle::CompleteMatchings(n, l));
  }
}

TEST_CASE("delta_r") {
  CHECK(DeltaR(8, 2, 1) == 15);
  for (int n = 2; n <= 12; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      CHECK(DeltaR(n, l, l) == 1);
      CHECK(DeltaR(n, l, 0) == MatchingsComplete(n, l));
    }
  }
  CHECK_THROWS_AS(DeltaR(8, 2, 3), InvalidArgument);
}

TEST_CASE("count examples") {
  const Edge c4[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  CHECK(CountMatchings(Graph(4, c4)) == Vec(4, {1, 4, 2}));
  const CountVector k6 = CountMatchings(Graph::Complete(6));
  CHECK(k6[1] == 15);
  CHECK(k6[2] == 45);
  CHECK(k6[3] == 15);
  CHECK(CountMatchings(Graph(5)) == Vec(5, {1, 0, 0}));
  CHECK(CountMatchings(Graph(5))[7] == 0);
}

TEST_CASE("complete graphs agree with the closed form up to n = 14") {
  for (int n = 1; n <= 14; ++n) {
    const CountVector cv = CountMatchings(Graph::Complete(n));
    for (int l = 0; 2 * l <= n; ++l) CHECK(cv[l] == MatchingsComplete(n, l));
  }
}

TEST_CASE("three kernels agree with subset enumeration on random graphs") {
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 9;
    const double p = (t % 3 == 0) ? 0.2 : (t % 3 == 1 ? 0.5 : 0.8);
    const Graph g = SampleGnp(n, p, {77, uint64_t(t)});
    const CountVector cv = CountMatchings(g);
    const auto edges = EdgesOf(g);
    CHECK(cv[0] == 1);
    CHECK(cv[1] == g.edge_count());
    for (int l = 0; 2 * l <= n; ++l) {
      const BigInt brute = oracle::SubsetMatchings(edges, l);
      CHECK(cv[l] == brute);
      if (l >= 1 && l <= kSparseMaxL) CHECK(CountLMatchingsSparse(g, l) == brute);
    }
  }
}

TEST_CASE("sparse kernel matches the polynomial kernel at n = 12, l = 3") {
  for (uint64_t s = 0; s < 50; ++s) {
    const Graph g = SampleGnp(12, 0.5, {s, 0});
    CHECK(CountLMatchingsSparse(g, 3) == CountMatchings(g)[3]);
  }
}

TEST_CASE("sparse kernel small cases and closed form for l = 2 on large graphs") {
  const Edge two[] = {{0, 1}, {2, 3}};
  CHECK(CountLMatchingsSparse(Graph(4, two), 2) == 1);
  CHECK_THROWS_AS(CountLMatchingsSparse(Graph(4, two), 5), InvalidArgument);
  for (uint64_t s = 0; s < 5; ++s) {
    const Graph g = SampleGnp(200, 0.1, {s, 3});
    CHECK(CountLMatchingsSparse(g, 1) == g.edge_count());
    // m_2 = C(E, 2) - sum_v C(deg v, 2)
    BigInt e = g.edge_count();
    BigInt expected = e * (e - 1) / 2;
    for (int d : g.degrees()) expected -= BigInt(d) * (d - 1) / 2;
    CHECK(CountLMatchingsSparse(g, 2) == expected);
  }
}

TEST_CASE("disjoint unions convolve") {
  for (uint64_t s = 0; s < 20; ++s) {
    const Graph a = SampleGnp(6, 0.5, {s, 1});
    const Graph b = SampleGnp(7, 0.6, {s, 2});
    Graph u(13);
    for (const Edge& e : a.edges()) u.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) u.add_edge(e.u + 6, e.v + 6);
    CHECK(CountMatchings(u) == Convolve(CountMatchings(a), CountMatchings(b)));
  }
}

TEST_CASE("edge deletion recursion") {
  for (uint64_t s = 0; s < 40; ++s) {
    const Graph g = SampleGnp(10, 0.5, {s, 9});
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const Edge e = edges[s % edges.size()];
    Graph minus_e = g;
    minus_e.remove_edge(e.u, e.v);
    Graph minus_uv = minus_e;
    for (const Edge& f : minus_e.edges()) {
      if (f.touches(e.u) || f.touches(e.v)) minus_uv.remove_edge(f.u, f.v);
    }
    const CountVector full = CountMatchings(g), a = CountMatchings(minus_e), b = CountMatchings(minus_uv);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(full[k] == a[k] + b[k - 1]);
  }
}

TEST_CASE("cap and memo") {
  CHECK_THROWS_AS(CountMatchings(Graph(29)), CapExceeded);
  CountOptions wide;
  wide.vertex_cap = 40;
  MemoStats stats;
  const CountVector cv = CountMatchings(Graph::Complete(34), wide, &stats);
  CHECK(cv[17] == MatchingsComplete(34, 17));
  CHECK(stats.misses > 0);
  // Cached results must equal fresh recomputation.
  const Graph g = SampleGnp(24, 0.3, {1, 1});
  CHECK(CountMatchings(g) == CountMatchings(g));
}

}  // TEST_SUITE
