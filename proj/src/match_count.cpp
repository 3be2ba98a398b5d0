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

#include "matchstat/match_count.hpp"

#include <bit>
#include <unordered_map>
#include <utility>

#include "matchstat/errors.hpp"

namespace matchstat {

BigInt DoubleFactorial(long m) {
  Require(m >= -1, "double factorial needs m >= -1");
  BigInt result = 1;
  for (long j = m; j > 1; j -= 2) result *= j;
  return result;
}

BigInt MatchingsComplete(int n, int l) {
  Require(n >= 1 && l >= 0, "need n >= 1 and l >= 0");
  Require(2L * l <= n, "an l-matching needs 2l <= n");
  return Binomial(n, 2L * l) * DoubleFactorial(2L * l - 1);
}

BigInt DeltaR(int n, int l, int r) {
  Require(n >= 1 && r >= 0 && r <= l, "need 0 <= r <= l");
  Require(2L * l <= n, "an l-matching needs 2l <= n");
  return Binomial(n - 2L * r, 2L * (l - r)) * DoubleFactorial(2L * (l - r) - 1);
}

CountVector::CountVector(int n, std::vector<BigInt> counts) : n_(n), counts_(std::move(counts)) {
  counts_.resize(static_cast<std::size_t>(n / 2) + 1, 0);
}

BigInt CountVector::operator[](std::size_t k) const {
  return k < counts_.size() ? counts_[k] : BigInt(0);
}

CountVector Convolve(const CountVector& a, const CountVector& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.counts()[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.counts()[i] * b.counts()[j];
  }
  return CountVector(a.n() + b.n(), std::move(out));
}

namespace {

BigInt ToBig(const BigInt& x) { return x; }

BigInt ToBig(unsigned __int128 x) {
  BigInt hi = static_cast<uint64_t>(x >> 64);
  return (hi << 64) | BigInt(static_cast<uint64_t>(x));
}

// Memoized vertex-elimination recursion over one ambient graph. Word is a
// 128-bit integer whenever the telephone number T(n) (total matchings of K_n,
// which bounds every intermediate) fits, and a big integer otherwise.
template <typename Word>
class MatchingCounter {
 public:
  using Poly = std::vector<Word>;

  explicit MatchingCounter(std::vector<uint64_t> adjacency) : adj_(std::move(adjacency)) {}

  const Poly& Solve(uint64_t mask) {
    if (std::popcount(mask) <= 1) return one_;
    if (auto it = memo_.find(mask); it != memo_.end()) {
      ++stats_.hits;
      return it->second;
    }
    ++stats_.misses;
    const uint64_t comp = ComponentOf(mask);
    Poly result;
    if (comp == mask) {
      result = SolveConnected(mask);
    } else {
      const Poly& left = Solve(comp);
      const Poly& right = Solve(mask & ~comp);
      result.assign(left.size() + right.size() - 1, Word(0));
      for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) result[i + j] += left[i] * right[j];
      }
    }
    return memo_.emplace(mask, std::move(result)).first->second;
  }

  const MemoStats& stats() const { return stats_; }

 private:
  uint64_t ComponentOf(uint64_t mask) const {
    uint64_t comp = mask & (~mask + 1);
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  Poly SolveConnected(uint64_t mask) {
    const int size = std::popcount(mask);
    if (size == 2) return Poly{Word(1), Word(1)};
    int branch = -1;
    int best_degree = -1;
    for (uint64_t m = mask; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int degree = std::popcount(adj_[v] & mask);
      if (degree > best_degree) {
        best_degree = degree;
        branch = v;
      }
    }
    const uint64_t rest = mask & ~(uint64_t{1} << branch);
    Poly result = Solve(rest);
    result.resize(static_cast<std::size_t>(size / 2) + 1, Word(0));
    for (uint64_t nb = adj_[branch] & mask; nb; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      const Poly& sub = Solve(rest & ~(uint64_t{1} << u));
      for (std::size_t k = 0; k < sub.size() && k + 1 < result.size(); ++k) result[k + 1] += sub[k];
    }
    return result;
  }

  std::vector<uint64_t> adj_;
  std::unordered_map<uint64_t, Poly> memo_;
  Poly one_{Word(1)};
  MemoStats stats_;
};

template <typename Word>
CountVector RunCounter(const Graph& g, MemoStats* stats) {
  MatchingCounter<Word> counter(g.adjacency_masks());
  const uint64_t all = g.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.n()) - 1;
  const auto& poly = counter.Solve(all);
  std::vector<BigInt> counts;
  counts.reserve(poly.size());
  for (const Word& w : poly) counts.push_back(ToBig(w));
  if (stats) *stats = counter.stats();
  return CountVector(g.n(), std::move(counts));
}

// Largest n whose telephone number stays below 2^128.
constexpr int kWideWordMaxN = 52;

}  // namespace

CountVector CountMatchings(const Graph& g, const CountOptions& options, MemoStats* stats) {
  if (g.n() > options.vertex_cap || g.n() > kBitsetVertexCap) {
    throw CapExceeded("count_matchings: n = " + std::to_string(g.n()) + " exceeds the cap of " +
                      std::to_string(std::min(options.vertex_cap, kBitsetVertexCap)));
  }
  if (g.n() <= kWideWordMaxN) return RunCounter<unsigned __int128>(g, stats);
  return RunCounter<BigInt>(g, stats);
}

BigInt CountLMatchingsSparse(const Graph& g, int l) {
  Require(l >= 0, "l must be non-negative");
  if (l > kSparseMaxL) throw InvalidArgument("sparse kernel supports l <= 4");
  if (l == 0) return 1;
  const std::vector<Edge> edges = g.edges();
  const auto total_edges = static_cast<long long>(edges.size());
  if (l == 1) return total_edges;
  const std::vector<int> degree = g.degrees();

  std::vector<char> used(g.n(), 0);
  std::vector<Vertex> chosen;
  chosen.reserve(2 * kSparseMaxL);
  unsigned __int128 total = 0;
  long long degree_sum = 0;

  auto close = [&]() {
    long long inside = 0;
    for (std::size_t a = 0; a < chosen.size(); ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) inside += g.has_edge(chosen[a], chosen[b]);
    }
    total += static_cast<unsigned __int128>(total_edges - degree_sum + inside);
  };

  // Depth-first over increasing edge positions; depth counts edges placed.
  auto extend = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == l - 1) {
      close();
      return;
    }
    for (std::size_t k = start; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      chosen.push_back(e.u);
      chosen.push_back(e.v);
      degree_sum += degree[e.u] + degree[e.v];
      self(self, k + 1, depth + 1);
      degree_sum -= degree[e.u] + degree[e.v];
      chosen.pop_back();
      chosen.pop_back();
      used[e.u] = used[e.v] = 0;
    }
  };
  extend(extend, 0, 0);
  return ToBig(total / static_cast<unsigned>(l));
}

}  // namespace matchstat
