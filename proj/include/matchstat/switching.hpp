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

#ifndef MATCHSTAT_SWITCHING_HPP_
#define MATCHSTAT_SWITCHING_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matchstat/graph.hpp"
#include "matchstat/log_real.hpp"
#include "matchstat/numeric.hpp"
#include "matchstat/pair_census.hpp"

namespace matchstat {

enum class MoveKind {
  kSharedEdgeFwd,  // F(i) -> F(i-1)
  kSharedEdgeInv,  // F(i-1) -> F(i)
  kN2Fwd,          // F(i, n2) -> F(i, n2-1)
  kN2Inv,          // F(i, n2-1) -> F(i, n2)
};

std::string MoveKindName(MoveKind kind);

// One labelled switching. For the shared-edge moves labels[0..5] are the
// vertices called 1..6: {1,2} is the shared edge, {3,4} lies in the first
// matching and {5,6} in the second. For the n2 moves labels[0..3] are
// (v, u, a, b) forward and (u, v, a, b) inverse, with a the first matching's
// partner and b the second's.
struct SwitchMove {
  MoveKind kind = MoveKind::kSharedEdgeFwd;
  std::array<int, 6> labels{};

  auto operator<=>(const SwitchMove&) const = default;
};

struct MatchingPair {
  Matching first;
  Matching second;

  auto operator<=>(const MatchingPair&) const = default;
};

// Moves are returned in ascending label order.
std::vector<SwitchMove> SharedEdgeFwdMoves(const MatchingPair& g);
std::vector<SwitchMove> SharedEdgeInvMoves(const MatchingPair& g);
std::vector<SwitchMove> N2FwdMoves(const MatchingPair& g, int n);
std::vector<SwitchMove> N2InvMoves(const MatchingPair& g, int n);

MatchingPair ApplyMove(const MatchingPair& g, const SwitchMove& move);

// A class of ordered pairs: all of F(i), or F(i, n2) when n2 >= 0.
struct PairClass {
  int i = 0;
  int n2 = -1;
};

struct Transition {
  enum class Kind { kSharedEdge, kN2 };
  Kind kind = Kind::kSharedEdge;
  int i = 0;        // shared edges of the source class
  int n2_from = -1; // for kN2: the source n2; the target is n2_from - 1
};

// Parses "i:<i>-<i-1>" or "n2:<i>:<from>-<to>".
Transition ParseTransition(const std::string& text);
std::string ToString(const Transition& t);

struct DoubleCountResult {
  Transition transition;
  BigInt lhs;               // forward moves summed over the source class
  BigInt rhs;               // inverse moves summed over the target class
  BigInt source_size;
  BigInt target_size;
  bool closure_ok = true;   // every move landed in its declared class
  bool formula_ok = true;   // n2 forward counts equal (n2 - 2i) n0
  // number of moves -> number of states having that many
  std::map<uint64_t, uint64_t> fwd_histogram;
  std::map<uint64_t, uint64_t> inv_histogram;
  bool equal() const { return lhs == rhs; }
};

struct SwitchingOptions {
  uint64_t enumeration_cap = kDefaultEnumerationCap;
  uint64_t pair_cap = 5000000;
  bool check_closure = true;
};

DoubleCountResult DoubleCountCheck(int n, int l, const Transition& t,
                                   const SwitchingOptions& options = {});

// Per-step choices of the even-k forward switching into K'.
struct SubcriticalChoices {
  // a_edges[j] lists the |I_j| - 1 edges added to member j, in order.
  std::vector<std::vector<Edge>> a_edges;
  // A perfect matching on the tuple positions 0..k-1, in enumeration order.
  std::vector<std::pair<int, int>> pairing;
  // f_edges[r] becomes the shared edge of pairing[r].
  std::vector<Edge> f_edges;
};

// Applies the five steps to a tuple of K \ K' with even k and returns the
// resulting tuple, which lies in K'. Throws InvalidArgument naming the step
// whose constraint a choice violates.
std::vector<Matching> SubcriticalForwardSwitch(const std::vector<Matching>& tuple,
                                               const SubcriticalChoices& choices, int n);

// x lies in the set X: sum_j j x_j = k l and sum_{j >= 2} j x_j >= k.
bool InXSet(const std::vector<int>& x, int l, int k);

// (1/2 C(n,2))^(k l - x_1 - k/2) for even k; the exponent is
// k l - x_1 - (k+1)/2 for odd k.
LogReal LowerSwitchBound(const std::vector<int>& x, int n, int l, int k);
// (k l - x_1)^(k-1) l^(k l - x_1 - k) C(n,2)^(sum_{r>=2} x_r) beta^(k l - x_1);
// the l exponent drops by one more for odd k.
LogReal UpperSwitchBound(const std::vector<int>& x, int n, int l, int k);
// ((k l - x_1)! / (floor((k l - x_1)/k)!)^k)^(1/(k l - x_1)).
double SwitchBeta(const std::vector<int>& x, int l, int k);
// p^(sum_r x_r) / (p^(k l - k/2) (1-p)^(k/2)).
LogReal PRatio(const std::vector<int>& x, int l, double p, int k);

}  // namespace matchstat

#endif  // MATCHSTAT_SWITCHING_HPP_
