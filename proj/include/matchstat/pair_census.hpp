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

#ifndef MATCHSTAT_PAIR_CENSUS_HPP_
#define MATCHSTAT_PAIR_CENSUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "matchstat/graph.hpp"
#include "matchstat/numeric.hpp"

namespace matchstat {

inline constexpr uint64_t kDefaultEnumerationCap = 100000;
inline constexpr uint64_t kDefaultPairCap = 200000000;
inline constexpr uint64_t kDefaultTupleCap = 10000000;

// All l-matchings of K_n in ascending order. Throws CapExceeded when their
// number exceeds cap.
std::vector<Matching> EnumerateMatchings(int n, int l, uint64_t cap = kDefaultEnumerationCap);

// The fixed matching {01, 23, ..., (2l-2)(2l-1)}.
Matching BaseMatching(int l);

// f(i, n2) over ordered pairs of l-matchings of K_n.
class PairCensusTable {
 public:
  PairCensusTable() = default;
  PairCensusTable(int n, int l);

  int n() const { return n_; }
  int l() const { return l_; }
  const BigInt& at(int i, int n2) const { return table_[i][n2]; }
  BigInt& at(int i, int n2) { return table_[i][n2]; }
  // f_i = sum over n2 of f(i, n2).
  std::vector<BigInt> marginals() const;
  BigInt total() const;

  friend bool operator==(const PairCensusTable&, const PairCensusTable&) = default;

 private:
  int n_ = 0;
  int l_ = 0;
  std::vector<std::vector<BigInt>> table_;  // [i][n2], 0 <= i <= l, 0 <= n2 <= 2l
};

enum class CensusMethod {
  // Every ordered pair, profiled one by one.
  kDoubleLoop,
  // Fix the first matching and scale by s; vertex relabelling acts
  // transitively on l-matchings and preserves profiles.
  kOrbit,
};

struct CensusOptions {
  CensusMethod method = CensusMethod::kDoubleLoop;
  uint64_t enumeration_cap = kDefaultEnumerationCap;
  uint64_t pair_cap = kDefaultPairCap;
};

PairCensusTable PairCensus(int n, int l, const CensusOptions& options = {});

enum class StructureTag { kSingleton, kKissingPair, kChainedTriple, kFlower, kOther };
std::string TagName(StructureTag tag, int petals = 0);

struct TupleComponent {
  std::vector<int> members;  // tuple positions, ascending
  int n_tilde = 0;           // members counted with repetition
  int m_tilde = 0;           // edges in the union
  StructureTag tag = StructureTag::kOther;
  int petals = 0;            // for kFlower
};

struct TupleClass {
  int k = 0;
  int l = 0;
  std::vector<TupleComponent> components;  // ordered by smallest member
  std::vector<int> x;                      // x[j-1] = edges in exactly j members
  bool in_K = false;
  bool in_K_prime = false;
  bool in_K_prime_flower = false;  // odd k: the triple is a 3-petal flower
  bool in_K_prime_chain = false;   // odd k: the triple is a chained triple
};

// Components of the intersection graph of the tuple (members adjacent when
// they share an edge) with their structure and the edge multiplicity vector.
TupleClass ClassifyTuple(const std::vector<Matching>& tuple);

// Integer polynomial in p: coeffs[e] multiplies p^e.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<int64_t> coeffs);
  static IntPoly Monomial(int exponent, int64_t coeff = 1);

  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  void AddMonomial(int exponent, int64_t coeff);
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly Scaled(int64_t factor) const;
  Rational Evaluate(const Rational& p) const;
  bool is_zero() const;
  std::string ToString() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b);

 private:
  void Trim();
  std::vector<int64_t> coeffs_;
};

// E[prod_j (X_{i_j} - p^l)] as a polynomial in p, by inclusion-exclusion over
// the union sizes of all 2^k sub-tuples. Requires k <= 6.
IntPoly YProductPolynomial(const std::vector<Matching>& tuple);
Rational YProductExpectation(const std::vector<Matching>& tuple, const Rational& p);

struct CheckPComponent {
  int n_tilde = 0;
  int m_tilde = 0;
  IntPoly check_p;   // p-check for the component
  IntPoly expect_y;  // E Y_C
  Rational check_p_value;
  Rational expect_y_value;
  bool bound_holds = false;  // |E Y_C| <= 2^n_tilde p-check
};

struct CheckP {
  std::vector<CheckPComponent> components;
  IntPoly product;  // p-check of the whole tuple
  Rational product_value;
  bool all_bounds_hold = true;
};

CheckP ComputeCheckP(const std::vector<Matching>& tuple, const Rational& p);

struct TupleSumOptions {
  uint64_t tuple_cap = kDefaultTupleCap;
  uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// Sum of E[prod Y] over all k-tuples in [s]^k with no isolated member, as a
// polynomial in p. Equals the k-th central moment of X in G(n, p).
IntPoly CentralMomentTuplePolynomial(int n, int l, int k, const TupleSumOptions& options = {});
Rational CentralMomentTupleSum(int n, int l, const Rational& p, int k,
                               const TupleSumOptions& options = {});

struct TupleCounts {
  BigInt total;       // s^k
  BigInt in_K;
  BigInt in_K_prime;
  BigInt in_K_prime_flower;
  BigInt in_K_prime_chain;
};

TupleCounts CountTupleClasses(int n, int l, int k, const TupleSumOptions& options = {});
BigInt CountKPrime(int n, int l, int k, const TupleSumOptions& options = {});
// Sequences of k/2 ordered kissing pairs, each pair edge-disjoint from every
// earlier member. k must be even.
BigInt CountT(int n, int l, int k, const TupleSumOptions& options = {});

struct DegreeCensus {
  BigInt D_min, D_max;  // neighbours sharing at least one edge
  BigInt d_min, d_max;  // neighbours sharing exactly one edge
  BigInt l_delta1;                       // l Delta_1
  BigInt l_delta1_minus_pairs_delta2;    // l Delta_1 - C(l,2) Delta_2
  // Bonferroni for "exactly one" needs the factor 2: l Delta_1 - 2 C(l,2) Delta_2.
  BigInt d_lower;
  // D <= l Delta_1, d <= l Delta_1 and d >= d_lower.
  bool bounds_hold = false;
  // d >= l Delta_1 - C(l,2) Delta_2; fails at small n (n = 4, l = 2 gives d = 0).
  bool single_delta2_lower_holds = false;
};

DegreeCensus ComputeDegreeCensus(int n, int l, uint64_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace matchstat

#endif  // MATCHSTAT_PAIR_CENSUS_HPP_
