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

#ifndef MATCHSTAT_MATCH_COUNT_HPP_
#define MATCHSTAT_MATCH_COUNT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "matchstat/graph.hpp"
#include "matchstat/numeric.hpp"

namespace matchstat {

// m!! = m (m-2) (m-4) ..., with 0!! = (-1)!! = 1.
BigInt DoubleFactorial(long m);

// Number of l-matchings of K_n: C(n, 2l) (2l-1)!!.
BigInt MatchingsComplete(int n, int l);

// Number of l-matchings of K_n containing a fixed r-matching:
// C(n-2r, 2l-2r) (2l-2r-1)!!.
BigInt DeltaR(int n, int l, int r);

// Exact numbers m_k of k-matchings for k = 0..floor(n/2).
class CountVector {
 public:
  CountVector() = default;
  CountVector(int n, std::vector<BigInt> counts);

  int n() const { return n_; }
  std::size_t size() const { return counts_.size(); }
  // m_k; zero for k beyond floor(n/2).
  BigInt operator[](std::size_t k) const;
  const std::vector<BigInt>& counts() const { return counts_; }

  friend bool operator==(const CountVector&, const CountVector&) = default;

 private:
  int n_ = 0;
  std::vector<BigInt> counts_;
};

// Polynomial product of two count vectors: the count vector of a disjoint
// union. The result is sized for n = a.n() + b.n().
CountVector Convolve(const CountVector& a, const CountVector& b);

struct CountOptions {
  int vertex_cap = 28;
};

struct MemoStats {
  std::size_t hits = 0;
  std::size_t misses = 0;
};

// All m_k of g, by the vertex recursion
//   M(G) = M(G - v) + x * sum_{u ~ v} M(G - u - v)
// on a maximum-degree vertex, with connected-component factorization and a
// memo keyed by the surviving-vertex bitmask. Throws CapExceeded when
// g.n() > options.vertex_cap.
CountVector CountMatchings(const Graph& g, const CountOptions& options = {},
                           MemoStats* stats = nullptr);

inline constexpr int kSparseMaxL = 4;

// m_l for l <= 4 on graphs of any size. Every (l-1)-matching A is enumerated
// in increasing edge order with disjointness pruning; the closing edge is
// counted in O(l^2) as |E| - sum_{v in V(A)} deg v + e(G[V(A)]). Each
// l-matching is reached once per member edge, hence the final division by l.
BigInt CountLMatchingsSparse(const Graph& g, int l);

}  // namespace matchstat

#endif  // MATCHSTAT_MATCH_COUNT_HPP_
