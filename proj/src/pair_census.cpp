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

#include "matchstat/pair_census.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "matchstat/errors.hpp"
#include "matchstat/match_count.hpp"

namespace matchstat {

namespace {

using EdgeMask = unsigned __int128;

// C(16, 2) = 120 edge slots fit one 128-bit mask.
constexpr int kMaskVertexCap = 16;

int Popcount(EdgeMask x) {
  return std::popcount(static_cast<uint64_t>(x)) + std::popcount(static_cast<uint64_t>(x >> 64));
}

EdgeMask MaskOf(const Matching& m, int n) {
  EdgeMask mask = 0;
  for (const Edge& e : m.edges()) mask |= EdgeMask{1} << EdgeIndex(n, e.u, e.v);
  return mask;
}

uint64_t VertexMaskOf(const Matching& m) {
  uint64_t mask = 0;
  for (const Edge& e : m.edges()) mask |= (uint64_t{1} << e.u) | (uint64_t{1} << e.v);
  return mask;
}

void CheckCount(const BigInt& count, uint64_t cap, const std::string& what) {
  if (count > cap) {
    throw CapExceeded(what + " needs " + count.str() + " steps, above the cap of " +
                      std::to_string(cap));
  }
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Components of the graph on 0..k-1 with adjacency given by `adjacent`,
// each listed ascending, ordered by smallest member.
std::vector<std::vector<int>> Components(int k, const std::function<bool(int, int)>& adjacent) {
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (adjacent(a, b)) parent[Find(parent, a)] = Find(parent, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(k, -1);
  for (int a = 0; a < k; ++a) {
    const int root = Find(parent, a);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(a);
  }
  return out;
}

// Three members with pairwise shares s_ab, s_bc, s_ac form a chained triple
// in some order when one of them meets both others once and those two do not
// meet.
bool IsChain(int s01, int s02, int s12) {
  return (s01 == 1 && s12 == 1 && s02 == 0) || (s01 == 1 && s02 == 1 && s12 == 0) ||
         (s02 == 1 && s12 == 1 && s01 == 0);
}

struct MaskFlags {
  bool in_K = false;
  bool in_K_prime = false;
  bool flower = false;
  bool chain = false;
};

// Classification of a tuple given as edge masks; mirrors ClassifyTuple.
MaskFlags ClassifyMasks(const EdgeMask* masks, int k) {
  int share[8][8];
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) share[a][b] = share[b][a] = Popcount(masks[a] & masks[b]);
  }
  const auto comps = Components(k, [&](int a, int b) { return share[a][b] > 0; });
  MaskFlags f;
  f.in_K = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() >= 2; });
  if (!f.in_K || static_cast<int>(comps.size()) != k / 2) return f;
  bool ok = true;
  for (const auto& c : comps) {
    if (c.size() == 2) {
      ok = ok && share[c[0]][c[1]] == 1;
    } else if (c.size() == 3) {
      const int s01 = share[c[0]][c[1]], s02 = share[c[0]][c[2]], s12 = share[c[1]][c[2]];
      if (IsChain(s01, s02, s12)) {
        f.chain = true;
      } else if (s01 == 1 && s02 == 1 && s12 == 1 &&
                 (masks[c[0]] & masks[c[1]] & masks[c[2]]) != 0) {
        f.flower = true;
      } else {
        ok = false;
      }
    } else {
      ok = false;
    }
  }
  f.in_K_prime = ok;
  if (!ok) f.flower = f.chain = false;
  return f;
}

struct MaskedMatchings {
  std::vector<Matching> matchings;
  std::vector<EdgeMask> masks;
  int base = 0;  // position of BaseMatching(l)
};

MaskedMatchings Prepare(int n, int l, uint64_t enumeration_cap) {
  Require(n <= kMaskVertexCap, "tuple enumeration supports n <= 16");
  MaskedMatchings out;
  out.matchings = EnumerateMatchings(n, l, enumeration_cap);
  out.masks.reserve(out.matchings.size());
  for (const Matching& m : out.matchings) out.masks.push_back(MaskOf(m, n));
  const Matching base = BaseMatching(l);
  out.base = static_cast<int>(
      std::lower_bound(out.matchings.begin(), out.matchings.end(), base) - out.matchings.begin());
  return out;
}

// Calls visit(tuple) for every tuple whose first entry is the base matching
// and whose remaining k-1 entries range over [s]^(k-1).
void ForEachRootedTuple(const MaskedMatchings& mm, int k,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k, 0);
  idx[0] = mm.base;
  const int s = static_cast<int>(mm.matchings.size());
  if (k == 1) {
    visit(idx);
    return;
  }
  while (true) {
    visit(idx);
    int pos = k - 1;
    while (pos >= 1 && ++idx[pos] == s) idx[pos--] = 0;
    if (pos == 0) break;
  }
}

}  // namespace

std::vector<Matching> EnumerateMatchings(int n, int l, uint64_t cap) {
  Require(n >= 1 && l >= 0 && 2 * l <= n, "need 0 <= 2l <= n");
  Require(n <= kBitsetVertexCap, "matching enumeration supports n <= 64");
  CheckCount(MatchingsComplete(n, l), cap, "enumerating matchings");
  std::vector<Matching> out;
  std::vector<Edge> current;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> extend = [&](int v, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    while (v < n && used[v]) ++v;
    if (n - v < 2 * remaining) return;
    used[v] = 1;
    for (int w = v + 1; w < n; ++w) {
      if (used[w]) continue;
      used[w] = 1;
      current.push_back({v, w});
      extend(v + 1, remaining - 1);
      current.pop_back();
      used[w] = 0;
    }
    used[v] = 0;
    extend(v + 1, remaining);
  };
  extend(0, l);
  std::sort(out.begin(), out.end());
  return out;
}

Matching BaseMatching(int l) {
  std::vector<Edge> edges;
  for (int j = 0; j < l; ++j) edges.push_back({2 * j, 2 * j + 1});
  return Matching(std::move(edges));
}

PairCensusTable::PairCensusTable(int n, int l)
    : n_(n), l_(l), table_(l + 1, std::vector<BigInt>(2 * l + 1, 0)) {}

std::vector<BigInt> PairCensusTable::marginals() const {
  std::vector<BigInt> f(l_ + 1, 0);
  for (int i = 0; i <= l_; ++i) {
    for (const BigInt& c : table_[i]) f[i] += c;
  }
  return f;
}

BigInt PairCensusTable::total() const {
  BigInt t = 0;
  for (const BigInt& c : marginals()) t += c;
  return t;
}

PairCensusTable PairCensus(int n, int l, const CensusOptions& options) {
  Require(l >= 1, "pair census needs l >= 1");
  const BigInt s = MatchingsComplete(n, l);
  const BigInt steps = options.method == CensusMethod::kOrbit ? s : s * s;
  CheckCount(steps, options.pair_cap, "pair census");
  const std::vector<Matching> all = EnumerateMatchings(n, l, options.enumeration_cap);
  std::vector<uint64_t> vmask;
  vmask.reserve(all.size());
  for (const Matching& m : all) vmask.push_back(VertexMaskOf(m));

  std::vector<std::vector<uint64_t>> counts(l + 1, std::vector<uint64_t>(2 * l + 1, 0));
  auto tally_row = [&](std::size_t a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      const int i = static_cast<int>(all[a].shared_edges(all[b]));
      const int n2 = std::popcount(vmask[a] & vmask[b]);
      ++counts[i][n2];
    }
  };
  PairCensusTable table(n, l);
  if (options.method == CensusMethod::kOrbit) {
    const auto base = std::lower_bound(all.begin(), all.end(), BaseMatching(l)) - all.begin();
    tally_row(static_cast<std::size_t>(base));
    for (int i = 0; i <= l; ++i) {
      for (int n2 = 0; n2 <= 2 * l; ++n2) table.at(i, n2) = s * counts[i][n2];
    }
  } else {
    for (std::size_t a = 0; a < all.size(); ++a) tally_row(a);
    for (int i = 0; i <= l; ++i) {
      for (int n2 = 0; n2 <= 2 * l; ++n2) table.at(i, n2) = counts[i][n2];
    }
  }
  return table;
}

std::string TagName(StructureTag tag, int petals) {
  switch (tag) {
    case StructureTag::kSingleton: return "singleton";
    case StructureTag::kKissingPair: return "kissing-pair";
    case StructureTag::kChainedTriple: return "chained-triple";
    case StructureTag::kFlower: return "flower(" + std::to_string(petals) + ")";
    case StructureTag::kOther: return "other";
  }
  return "other";
}

TupleClass ClassifyTuple(const std::vector<Matching>& tuple) {
  const int k = static_cast<int>(tuple.size());
  Require(k >= 1, "empty tuple");
  const int l = static_cast<int>(tuple[0].size());
  for (const Matching& m : tuple) Require(static_cast<int>(m.size()) == l, "tuple members differ in size");

  std::vector<std::vector<int>> share(k, std::vector<int>(k, 0));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      share[a][b] = share[b][a] = static_cast<int>(tuple[a].shared_edges(tuple[b]));
    }
  }
  TupleClass tc;
  tc.k = k;
  tc.l = l;
  const auto comps = Components(k, [&](int a, int b) { return share[a][b] > 0; });
  for (const auto& members : comps) {
    TupleComponent c;
    c.members = members;
    c.n_tilde = static_cast<int>(members.size());
    std::set<Edge> union_edges;
    for (int j : members) union_edges.insert(tuple[j].edges().begin(), tuple[j].edges().end());
    c.m_tilde = static_cast<int>(union_edges.size());

    bool pairwise_one = true;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        pairwise_one = pairwise_one && share[members[a]][members[b]] == 1;
      }
    }
    bool common_edge = false;
    if (pairwise_one && members.size() >= 2) {
      for (const Edge& e : tuple[members[0]].edges()) {
        bool everywhere = true;
        for (int j : members) everywhere = everywhere && tuple[j].contains(e);
        common_edge = common_edge || everywhere;
      }
    }
    if (members.size() == 1) {
      c.tag = StructureTag::kSingleton;
    } else if (members.size() == 2) {
      c.tag = share[members[0]][members[1]] == 1 ? StructureTag::kKissingPair : StructureTag::kOther;
    } else if (members.size() == 3 &&
               IsChain(share[members[0]][members[1]], share[members[0]][members[2]],
                       share[members[1]][members[2]])) {
      c.tag = StructureTag::kChainedTriple;
    } else if (pairwise_one && common_edge) {
      c.tag = StructureTag::kFlower;
      c.petals = static_cast<int>(members.size());
    } else {
      c.tag = StructureTag::kOther;
    }
    tc.components.push_back(std::move(c));
  }

  std::map<Edge, int> multiplicity;
  for (const Matching& m : tuple) {
    for (const Edge& e : m.edges()) ++multiplicity[e];
  }
  tc.x.assign(k, 0);
  for (const auto& [edge, count] : multiplicity) ++tc.x[count - 1];

  tc.in_K = std::all_of(tc.components.begin(), tc.components.end(),
                        [](const TupleComponent& c) { return c.n_tilde >= 2; });
  if (tc.in_K && static_cast<int>(tc.components.size()) == k / 2) {
    bool ok = true;
    bool flower = false;
    bool chain = false;
    for (const TupleComponent& c : tc.components) {
      if (c.n_tilde == 2) {
        ok = ok && c.tag == StructureTag::kKissingPair;
      } else if (c.n_tilde == 3) {
        if (c.tag == StructureTag::kChainedTriple) chain = true;
        else if (c.tag == StructureTag::kFlower) flower = true;
        else ok = false;
      } else {
        ok = false;
      }
    }
    tc.in_K_prime = ok;
    tc.in_K_prime_flower = ok && flower;
    tc.in_K_prime_chain = ok && chain;
  }
  return tc;
}

IntPoly::IntPoly(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) { Trim(); }

IntPoly IntPoly::Monomial(int exponent, int64_t coeff) {
  IntPoly p;
  p.AddMonomial(exponent, coeff);
  return p;
}

void IntPoly::AddMonomial(int exponent, int64_t coeff) {
  Require(exponent >= 0, "negative exponent");
  if (static_cast<std::size_t>(exponent) >= coeffs_.size()) coeffs_.resize(exponent + 1, 0);
  coeffs_[exponent] += coeff;
  Trim();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
  Trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) { return *this += o.Scaled(-1); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      int64_t term = 0;
      if (__builtin_mul_overflow(a.coeffs_[i], b.coeffs_[j], &term) ||
          __builtin_add_overflow(out[i + j], term, &out[i + j])) {
        throw CapExceeded("polynomial coefficient overflow");
      }
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::Scaled(int64_t factor) const {
  IntPoly out = *this;
  for (int64_t& c : out.coeffs_) {
    if (__builtin_mul_overflow(c, factor, &c)) throw CapExceeded("polynomial coefficient overflow");
  }
  out.Trim();
  return out;
}

Rational IntPoly::Evaluate(const Rational& p) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

bool IntPoly::is_zero() const { return coeffs_.empty(); }

std::string IntPoly::ToString() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const int64_t c = coeffs_[e];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const int64_t a = c < 0 ? -c : c;
    if (e == 0) out += std::to_string(a);
    else {
      if (a != 1) out += std::to_string(a) + "*";
      out += e == 1 ? "p" : "p^" + std::to_string(e);
    }
  }
  return out;
}

bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

void IntPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly YProductPolynomial(const std::vector<Matching>& tuple) {
  const int k = static_cast<int>(tuple.size());
  Require(k >= 1 && k <= 6, "Y-product expectation supports 1 <= k <= 6");
  const int l = static_cast<int>(tuple[0].size());
  IntPoly out;
  for (unsigned subset = 0; subset < (1u << k); ++subset) {
    std::set<Edge> union_edges;
    for (int j = 0; j < k; ++j) {
      if (subset >> j & 1u) union_edges.insert(tuple[j].edges().begin(), tuple[j].edges().end());
    }
    const int outside = k - std::popcount(subset);
    out.AddMonomial(l * outside + static_cast<int>(union_edges.size()), outside % 2 ? -1 : 1);
  }
  return out;
}

Rational YProductExpectation(const std::vector<Matching>& tuple, const Rational& p) {
  return YProductPolynomial(tuple).Evaluate(p);
}

CheckP ComputeCheckP(const std::vector<Matching>& tuple, const Rational& p) {
  const TupleClass tc = ClassifyTuple(tuple);
  CheckP out;
  out.product = IntPoly::Monomial(0);
  for (const TupleComponent& c : tc.components) {
    CheckPComponent pc;
    pc.n_tilde = c.n_tilde;
    pc.m_tilde = c.m_tilde;
    if (c.n_tilde <= 2) {
      pc.check_p = IntPoly::Monomial(c.m_tilde) - IntPoly::Monomial(c.n_tilde * tc.l);
    } else {
      pc.check_p = IntPoly::Monomial(c.m_tilde);
    }
    std::vector<Matching> members;
    for (int j : c.members) members.push_back(tuple[j]);
    pc.expect_y = YProductPolynomial(members);
    pc.check_p_value = pc.check_p.Evaluate(p);
    pc.expect_y_value = pc.expect_y.Evaluate(p);
    const Rational abs_y = pc.expect_y_value < 0 ? Rational(-pc.expect_y_value) : pc.expect_y_value;
    pc.bound_holds = abs_y <= Rational(BigInt(1) << c.n_tilde) * pc.check_p_value;
    out.all_bounds_hold = out.all_bounds_hold && pc.bound_holds;
    out.product = out.product * pc.check_p;
    out.components.push_back(std::move(pc));
  }
  out.product_value = out.product.Evaluate(p);
  return out;
}

IntPoly CentralMomentTuplePolynomial(int n, int l, int k, const TupleSumOptions& options) {
  Require(k >= 1 && k <= 6, "central moment tuple sums support 1 <= k <= 6");
  Require(l >= 1, "need l >= 1");
  const BigInt s = MatchingsComplete(n, l);
  CheckCount(boost::multiprecision::pow(s, static_cast<unsigned>(k - 1)), options.tuple_cap,
             "central moment tuple sum");
  const MaskedMatchings mm = Prepare(n, l, options.enumeration_cap);
  const std::size_t count = mm.masks.size();
  std::vector<uint8_t> adjacent(count * count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) adjacent[a * count + b] = (mm.masks[a] & mm.masks[b]) != 0;
  }
  std::vector<int64_t> coeffs(static_cast<std::size_t>(k * l) + 1, 0);
  std::vector<EdgeMask> unions(1u << k);
  ForEachRootedTuple(mm, k, [&](const std::vector<int>& idx) {
    for (int j = 0; j < k; ++j) {
      bool touched = false;
      for (int t = 0; t < k && !touched; ++t) {
        touched = t != j && adjacent[idx[j] * count + idx[t]];
      }
      if (!touched) return;
    }
    unions[0] = 0;
    for (unsigned subset = 1; subset < (1u << k); ++subset) {
      const int low = std::countr_zero(subset);
      unions[subset] = unions[subset & (subset - 1)] | mm.masks[idx[low]];
    }
    for (unsigned subset = 0; subset < (1u << k); ++subset) {
      const int outside = k - std::popcount(subset);
      coeffs[l * outside + Popcount(unions[subset])] += outside % 2 ? -1 : 1;
    }
  });
  // Every rooted tuple stands for s tuples with the same structure.
  const auto scale = s.convert_to<int64_t>();
  return IntPoly(std::move(coeffs)).Scaled(scale);
}

Rational CentralMomentTupleSum(int n, int l, const Rational& p, int k,
                               const TupleSumOptions& options) {
  return CentralMomentTuplePolynomial(n, l, k, options).Evaluate(p);
}

TupleCounts CountTupleClasses(int n, int l, int k, const TupleSumOptions& options) {
  Require(k >= 1 && k <= 8, "tuple classification supports 1 <= k <= 8");
  Require(l >= 1, "need l >= 1");
  const BigInt s = MatchingsComplete(n, l);
  CheckCount(boost::multiprecision::pow(s, static_cast<unsigned>(k - 1)), options.tuple_cap,
             "tuple classification");
  const MaskedMatchings mm = Prepare(n, l, options.enumeration_cap);
  uint64_t in_K = 0, in_Kp = 0, flower = 0, chain = 0;
  std::vector<EdgeMask> masks(k);
  ForEachRootedTuple(mm, k, [&](const std::vector<int>& idx) {
    for (int j = 0; j < k; ++j) masks[j] = mm.masks[idx[j]];
    const MaskFlags f = ClassifyMasks(masks.data(), k);
    in_K += f.in_K;
    in_Kp += f.in_K_prime;
    flower += f.flower;
    chain += f.chain;
  });
  TupleCounts out;
  out.total = boost::multiprecision::pow(s, static_cast<unsigned>(k));
  out.in_K = s * in_K;
  out.in_K_prime = s * in_Kp;
  out.in_K_prime_flower = s * flower;
  out.in_K_prime_chain = s * chain;
  return out;
}

BigInt CountKPrime(int n, int l, int k, const TupleSumOptions& options) {
  return CountTupleClasses(n, l, k, options).in_K_prime;
}

BigInt CountT(int n, int l, int k, const TupleSumOptions& options) {
  Require(k >= 2 && k % 2 == 0, "|T| is defined for even k >= 2");
  Require(l >= 1, "need l >= 1");
  const MaskedMatchings mm = Prepare(n, l, options.enumeration_cap);
  const int s = static_cast<int>(mm.masks.size());
  std::vector<std::pair<int, int>> kissing;
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      if (Popcount(mm.masks[a] & mm.masks[b]) == 1) kissing.emplace_back(a, b);
    }
  }
  const int pairs = k / 2;
  const BigInt per_root = BigInt(kissing.size()) / s;
  CheckCount(per_root * boost::multiprecision::pow(BigInt(kissing.size()), pairs - 1),
             options.tuple_cap, "|T| enumeration");
  uint64_t count = 0;
  std::function<void(int, EdgeMask)> extend = [&](int depth, EdgeMask used) {
    if (depth == pairs) {
      ++count;
      return;
    }
    for (const auto& [a, b] : kissing) {
      if (depth == 0 && a != mm.base) continue;
      const EdgeMask both = mm.masks[a] | mm.masks[b];
      if ((both & used) != 0) continue;
      extend(depth + 1, used | both);
    }
  };
  extend(0, 0);
  return BigInt(s) * count;
}

DegreeCensus ComputeDegreeCensus(int n, int l, uint64_t enumeration_cap) {
  Require(l >= 1, "need l >= 1");
  const MaskedMatchings mm = Prepare(n, l, enumeration_cap);
  const std::size_t s = mm.masks.size();
  DegreeCensus out;
  bool first = true;
  for (std::size_t a = 0; a < s; ++a) {
    uint64_t D = 0, d = 0;
    for (std::size_t b = 0; b < s; ++b) {
      const int shared = Popcount(mm.masks[a] & mm.masks[b]);
      if (b != a && shared > 0) ++D;
      if (shared == 1) ++d;
    }
    if (first || D < out.D_min) out.D_min = D;
    if (first || D > out.D_max) out.D_max = D;
    if (first || d < out.d_min) out.d_min = d;
    if (first || d > out.d_max) out.d_max = d;
    first = false;
  }
  out.l_delta1 = BigInt(l) * DeltaR(n, l, 1);
  const BigInt pairs_delta2 = l >= 2 ? Binomial(l, 2) * DeltaR(n, l, 2) : BigInt(0);
  out.l_delta1_minus_pairs_delta2 = out.l_delta1 - pairs_delta2;
  out.d_lower = out.l_delta1 - 2 * pairs_delta2;
  out.bounds_hold = out.D_max <= out.l_delta1 && out.d_max <= out.l_delta1 && out.d_min >= out.d_lower;
  out.single_delta2_lower_holds = out.d_min >= out.l_delta1_minus_pairs_delta2;
  return out;
}

}  // namespace matchstat
