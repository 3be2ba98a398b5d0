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

#include "matchstat/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "matchstat/errors.hpp"

namespace matchstat {

std::size_t EdgeIndex(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const auto su = static_cast<std::size_t>(u);
  return su * n - su * (su + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

Edge EdgeFromIndex(int n, std::size_t index) {
  Require(index < EdgeSlots(n), "edge index out of range");
  // Row u holds n-1-u slots; walk rows, which is cheap for n <= a few 1000.
  Vertex u = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return Edge{u, u + 1 + static_cast<Vertex>(index)};
}

Graph::Graph(int n) : n_(n), bits_((EdgeSlots(n) + 63) / 64, 0) {
  Require(n >= 1, "graph needs at least one vertex");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_pair(e.u, e.v);
    const std::size_t idx = EdgeIndex(n_, e.u, e.v);
    Require(!has_slot(idx), "duplicate edge");
    set_slot(idx);
  }
}

Graph Graph::Complete(int n) {
  Graph g(n);
  for (std::size_t i = 0; i < g.slots(); ++i) g.set_slot(i);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  Require(u >= 0 && v >= 0 && u < n_ && v < n_, "edge endpoint out of range");
  Require(u != v, "loops are not allowed");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  return has_slot(EdgeIndex(n_, u, v));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  set_slot(EdgeIndex(n_, u, v));
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  const std::size_t idx = EdgeIndex(n_, u, v);
  bits_[idx >> 6] &= ~(uint64_t{1} << (idx & 63));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  std::size_t idx = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v, ++idx) {
      if (has_slot(idx)) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<uint64_t> Graph::adjacency_masks() const {
  Require(n_ <= kBitsetVertexCap, "bitset kernels need n <= 64");
  std::vector<uint64_t> adj(n_, 0);
  for (const Edge& e : edges()) {
    adj[e.u] |= uint64_t{1} << e.v;
    adj[e.v] |= uint64_t{1} << e.u;
  }
  return adj;
}

void WriteGraph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

Graph ReadGraph(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw IoError("graph file: missing header line \"n m\"");
  if (n < 1) throw IoError("graph file: n must be positive");
  if (m < 0 || static_cast<std::size_t>(m) > EdgeSlots(static_cast<int>(n))) {
    throw IoError("graph file: edge count out of range");
  }
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw IoError("graph file: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw IoError("graph file: invalid edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw IoError("graph file: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw IoError("graph file: trailing content after edge list");
  return g;
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  WriteGraph(out, g);
  return out.str();
}

Graph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ReadGraph(in);
}

void WriteGraphFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  WriteGraph(out, g);
  if (!out) throw IoError("failed writing " + path);
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return ReadGraph(in);
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    Require(e.u != e.v && e.u >= 0 && e.v >= 0, "matching edge must join two distinct vertices");
    e = Edge::Of(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> seen;
  seen.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  std::sort(seen.begin(), seen.end());
  Require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
          "matching edges must be pairwise vertex-disjoint");
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::Of(e.u, e.v));
}

bool Matching::covers(Vertex v) const {
  return std::any_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); });
}

Vertex Matching::max_vertex() const {
  Vertex best = -1;
  for (const Edge& e : edges_) best = std::max(best, e.v);
  return best;
}

std::vector<int> Matching::partners(int n) const {
  std::vector<int> partner(n, -1);
  for (const Edge& e : edges_) {
    Require(e.v < n, "matching vertex out of range");
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

std::size_t Matching::shared_edges(const Matching& other) const {
  std::size_t count = 0;
  auto a = edges_.begin();
  auto b = other.edges_.begin();
  while (a != edges_.end() && b != other.edges_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::string ToString(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m.edges()[i].u) + "-" + std::to_string(m.edges()[i].v);
  }
  return out + "}";
}

PairProfile ComputePairProfile(const Matching& a, const Matching& b, int n) {
  Require(a.size() == b.size(), "pair profile needs matchings of equal size");
  Require(a.max_vertex() < n && b.max_vertex() < n, "matching vertex out of range");
  std::vector<uint8_t> cover(n, 0);
  for (const Edge& e : a.edges()) cover[e.u] |= 1, cover[e.v] |= 1;
  for (const Edge& e : b.edges()) cover[e.u] |= 2, cover[e.v] |= 2;
  PairProfile p;
  for (uint8_t c : cover) {
    if (c == 3) ++p.shared_vertices;
    else if (c == 0) ++p.free_vertices;
    else ++p.single_vertices;
  }
  p.shared_edges = static_cast<int>(a.shared_edges(b));
  p.union_edge_count = static_cast<int>(2 * a.size()) - p.shared_edges;
  return p;
}

namespace {

uint64_t SplitMix64(uint64_t& x) {
  uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(SeedSpec spec) {
  // Hash the stream index first so that neighbouring streams start far apart.
  uint64_t key = spec.stream;
  const uint64_t stream_hash = SplitMix64(key);
  uint64_t x = spec.seed ^ stream_hash;
  for (uint64_t& s : state_) s = SplitMix64(x);
}

Rng::result_type Rng::operator()() {
  const uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

uint64_t Rng::below(uint64_t bound) {
  // Lemire's nearly divisionless rejection method.
  unsigned __int128 product = static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<uint64_t>(product);
  if (low < bound) {
    const uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<uint64_t>(product);
    }
  }
  return static_cast<uint64_t>(product >> 64);
}

Graph SampleGnp(int n, double p, SeedSpec seed) {
  Require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
  Graph g(n);
  if (p == 0.0) return g;
  if (p == 1.0) return Graph::Complete(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < g.slots(); ++i) {
    if (rng.uniform() < p) g.set_slot(i);
  }
  return g;
}

Graph SampleGnm(int n, std::size_t m, SeedSpec seed) {
  const std::size_t slots = EdgeSlots(n);
  Require(m <= slots, "m must lie in [0, C(n,2)]");
  Graph g(n);
  Rng rng(seed);
  // Partial Fisher-Yates over the slot indices; only displaced entries are
  // stored, so the cost is O(m) regardless of C(n,2).
  std::unordered_map<std::size_t, std::size_t> displaced;
  displaced.reserve(2 * m);
  auto value_at = [&](std::size_t pos) {
    auto it = displaced.find(pos);
    return it == displaced.end() ? pos : it->second;
  };
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t j = k + static_cast<std::size_t>(rng.below(slots - k));
    const std::size_t picked = value_at(j);
    displaced[j] = value_at(k);
    g.set_slot(picked);
  }
  return g;
}

}  // namespace matchstat
