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

// Revenue benchmarks, brute-force pure schemes, and instance generators.

#ifndef MIXSIG_BENCHMARKS_H_
#define MIXSIG_BENCHMARKS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "mixsig/model.h"

namespace mixsig {

struct BenchmarkReport {
  // min over i' of sum_j max_{i != i'} psi[i][j], attained at i0.
  Rational b;
  int i0 = 0;
  // sum_j max_{i != i*} psi[i][j] where i* maximizes the value of its own
  // won types, sum_{j in d(i)} psi[i][j].
  Rational b_tilde;
  int i_star = 0;
};

// Both benchmarks; ties pick the lowest bidder index. Throws
// Error(kDegenerate) when n < 2.
BenchmarkReport ComputeBenchmarks(const PsiMatrix& psi);

// sum_j max_i psi[i][j]; no scheme earns more.
Rational RevenueUpperBound(const PsiMatrix& psi);

struct PureSchemeResult {
  std::vector<std::vector<int>> partition;  // parts in first-element order
  Rational revenue;
};

inline constexpr int kMaxPureTypes = 10;

// Revenue of revealing only which part of `partition` the type fell in.
Rational PartitionRevenue(const PsiMatrix& psi,
                          const std::vector<std::vector<int>>& partition);

// Calls `visit` with the restricted growth string of every set partition of
// {0..m-1}, in lexicographic order. a[0] = 0 and a[k] <= 1 + max(a[0..k-1]).
void ForEachRestrictedGrowthString(
    int m, const std::function<void(const std::vector<int>&)>& visit);

// Best pure scheme by exhaustive search over set partitions; the
// lexicographically first maximizer wins ties. Throws Error(kDegenerate) when
// n < 2 and Error(kTooLarge) when m > 10.
PureSchemeResult OptimalPureRevenue(const PsiMatrix& psi);

// The pure scheme sending one signal per part.
SignalingScheme PartitionScheme(const std::vector<std::vector<int>>& partition);

// Bidder 0 values type 0 at k+1, bidder i >= 1 values type i at 1, all
// other valuations 0, uniform prior over k+1 types. Throws Error(kBadK)
// unless k is even and >= 2.
AuctionInstance GapInstance(int k);

// n = m bidders, identity valuations, uniform prior.
AuctionInstance IdentityInstance(int m);

// The 3x3 psi-matrix [[500,500,0],[499,498,1],[7,3,999]] on which the two
// benchmarks drop different bidders.
PsiMatrix Figure2Psi();

// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is the state
// mixed by z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
// z = (z ^ z>>27) * 0x94D049BB133111EB; z ^ z>>31.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t Next();
  // Uniform in [0, bound) by rejection, so no modulo bias.
  uint64_t Below(uint64_t bound);

 private:
  uint64_t state_;
};

// Valuations drawn row by row (bidder-major) as Below(max_value + 1) from a
// SplitMix64 seeded with `seed`; uniform prior.
AuctionInstance RandomInstance(uint64_t seed, int n, int m, int max_value);

}  // namespace mixsig

#endif  // MIXSIG_BENCHMARKS_H_
