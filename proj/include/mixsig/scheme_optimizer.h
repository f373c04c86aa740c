// Copyright 2026 The mixsig Authors.
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

// Linear programs whose optimum is the revenue-optimal mixed signaling scheme.
//
// Three formulations of increasing economy:
//
//  * Naive: one block of variables x_j(S, i1, i2) for every nonempty type set
//    S and ordered bidder pair; the block is a signal on S in which i1 bids
//    highest and i2 second. Exponential in m; used as an oracle.
//  * Reduced: singleton variables x_j plus, for each ordered pair (i1, i2),
//    a block y_j(i1, i2) over the types won by i1 or i2 when revealed alone.
//  * Equal-bid: singletons plus one block per unordered pair of bidders that
//    each win some type, with the two bids tied. At most
//    m + min(C(n,2), C(m,2)) signals.
//
// All three have the same optimum.

#ifndef MIXSIG_SCHEME_OPTIMIZER_H_
#define MIXSIG_SCHEME_OPTIMIZER_H_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "mixsig/lp.h"
#include "mixsig/model.h"

namespace mixsig {

enum class LpMethod { kNaive, kReduced, kEqualBid };

std::string_view LpMethodName(LpMethod method);
// Accepts "naive", "reduced", "equalbid". Throws Error(kParseError).
LpMethod ParseLpMethod(std::string_view name);

struct TypeVar {
  int type;
  int var;
};

// One candidate signal of an LP: `first` bids highest, `second` bids second
// (ties allowed), masses in `vars`.
struct SignalBlock {
  int first = 0;
  int second = 0;
  std::vector<TypeVar> vars;
  uint32_t subset = 0;  // bitmask of the block's types
};

struct NaiveLpIndex {
  std::vector<SignalBlock> blocks;
  int num_types = 0;
};

struct ReducedLpIndex {
  std::vector<int> singleton_vars;  // x_j, one per type
  std::vector<SignalBlock> pair_blocks;
  bool equal_bid = false;

  int NumSignalBlocks() const {
    return static_cast<int>(singleton_vars.size() + pair_blocks.size());
  }
};

// Largest m accepted by the naive formulation.
inline constexpr int kMaxNaiveTypes = 8;

// Throws Error(kDegenerate) when n < 2, Error(kTooLarge) when m > 8.
std::pair<LpProblem, NaiveLpIndex> BuildNaiveLp(const PsiMatrix& psi);
// Throws Error(kDegenerate) when n < 2.
std::pair<LpProblem, ReducedLpIndex> BuildReducedLp(const PsiMatrix& psi);
// Throws Error(kDegenerate) when n < 2.
std::pair<LpProblem, ReducedLpIndex> BuildEqualBidLp(const PsiMatrix& psi);

// Turns an optimal LP point into a canonical scheme: one signal per block with
// positive mass, and one singleton per type holding x_j plus whatever mass the
// LP left unassigned. Throws Error(kNotOptimal).
SignalingScheme ExtractScheme(const LpSolution& solution,
                              const ReducedLpIndex& index,
                              const PsiMatrix& psi);
SignalingScheme ExtractScheme(const LpSolution& solution,
                              const NaiveLpIndex& index, const PsiMatrix& psi);

struct MixedSolution {
  Rational revenue;
  SignalingScheme scheme;
  int lp_variables = 0;
  int lp_constraints = 0;
  int pivots = 0;
};

// Optimal mixed scheme; with one bidder the revenue is 0 and the scheme
// reveals every type.
MixedSolution OptimalMixed(const PsiMatrix& psi,
                           LpMethod method = LpMethod::kEqualBid);

// The scheme that reveals every type: {j -> 1} for each j.
SignalingScheme AllSingletonScheme(int num_types);

}  // namespace mixsig

#endif  // MIXSIG_SCHEME_OPTIMIZER_H_
