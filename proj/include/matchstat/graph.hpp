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

#ifndef MATCHSTAT_GRAPH_HPP_
#define MATCHSTAT_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace matchstat {

using Vertex = int;

// An unordered vertex pair stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge Of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool touches(Vertex w) const { return u == w || v == w; }
  bool disjoint_from(const Edge& o) const {
    return u != o.u && u != o.v && v != o.u && v != o.v;
  }
  auto operator<=>(const Edge&) const = default;
};

// Kernels that keep one machine word per vertex row are limited to this many
// vertices.
inline constexpr int kBitsetVertexCap = 64;

// Number of edge slots C(n, 2).
constexpr std::size_t EdgeSlots(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

// Canonical edge index of {u, v}: u*n - u(u+1)/2 + (v-u-1) for u < v.
std::size_t EdgeIndex(int n, Vertex u, Vertex v);
Edge EdgeFromIndex(int n, std::size_t index);

// Simple undirected graph on {0..n-1} stored as a bit array over canonical
// edge indices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  static Graph Complete(int n);

  int n() const { return n_; }
  std::size_t slots() const { return EdgeSlots(n_); }
  std::size_t edge_count() const;

  bool has_edge(Vertex u, Vertex v) const;
  bool has_slot(std::size_t index) const {
    return (bits_[index >> 6] >> (index & 63)) & 1u;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void set_slot(std::size_t index) { bits_[index >> 6] |= uint64_t{1} << (index & 63); }

  // Edges in ascending canonical index.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  // One neighbourhood bitmask per vertex; requires n <= kBitsetVertexCap.
  std::vector<uint64_t> adjacency_masks() const;

  const std::vector<uint64_t>& words() const { return bits_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<uint64_t> bits_;
};

// Text format: "n m" on the first line, then m lines "u v" (u < v) in
// ascending edge index.
void WriteGraph(std::ostream& out, const Graph& g);
Graph ReadGraph(std::istream& in);
std::string FormatGraph(const Graph& g);
Graph ParseGraph(const std::string& text);
void WriteGraphFile(const std::string& path, const Graph& g);
Graph ReadGraphFile(const std::string& path);

// A set of pairwise vertex-disjoint edges, kept sorted so that equal
// matchings have equal representations.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(const Edge& e) const;
  bool covers(Vertex v) const;
  Vertex max_vertex() const;
  // partner[v] is the vertex matched to v, or -1.
  std::vector<int> partners(int n) const;
  std::size_t shared_edges(const Matching& other) const;

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

std::string ToString(const Matching& m);

// Vertex/edge overlap statistics of an ordered pair of equal-size matchings.
struct PairProfile {
  int shared_edges = 0;      // i
  int shared_vertices = 0;   // n2
  int single_vertices = 0;   // n1
  int free_vertices = 0;     // n0
  int union_edge_count = 0;  // 2l - i

  friend bool operator==(const PairProfile&, const PairProfile&) = default;
};

PairProfile ComputePairProfile(const Matching& a, const Matching& b, int n);

// (master seed, stream) pair; each stream yields an independent generator.
struct SeedSpec {
  uint64_t seed = 0;
  uint64_t stream = 0;
};

// xoshiro256** keyed by a SplitMix64 hash of (seed, stream). The mapping is a
// pure function of the SeedSpec, so trial t always sees the same draws no
// matter which thread runs it.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(SeedSpec spec);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on {0, ..., bound-1}; bound > 0.
  uint64_t below(uint64_t bound);

 private:
  uint64_t state_[4];
};

Graph SampleGnp(int n, double p, SeedSpec seed);
Graph SampleGnm(int n, std::size_t m, SeedSpec seed);

}  // namespace matchstat

#endif  // MATCHSTAT_GRAPH_HPP_
