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

#include "mixsig/benchmarks.h"

#include <gtest/gtest.h>

#include "mixsig/error.h"
#include "test_util.h"

namespace mixsig {
namespace {

using ::mixsig::testing::BruteForcePureRevenue;
using ::mixsig::testing::CorpusPsi;
using ::mixsig::testing::MakePsi;

Rational Q(long num, long den = 1) { return MakeRational(num, den); }

TEST(BenchmarksTest, Figure2) {
  BenchmarkReport r = ComputeBenchmarks(Figure2Psi());
  EXPECT_EQ(r.b, 1001);
  EXPECT_EQ(r.i0, 2);
  EXPECT_EQ(r.b_tilde, 1996);
  EXPECT_EQ(r.i_star, 0);
  EXPECT_NE(r.i0, r.i_star);
  EXPECT_LE(r.b_tilde, 2 * r.b);
  EXPECT_EQ(RevenueUpperBound(Figure2Psi()), 1999);
}

TEST(BenchmarksTest, Identity) {
  for (int m = 2; m <= 6; ++m) {
    BenchmarkReport r = ComputeBenchmarks(BuildPsi(IdentityInstance(m)));
    EXPECT_EQ(r.b, Q(m - 1, m));
    EXPECT_EQ(r.b_tilde, Q(m - 1, m));
    EXPECT_EQ(RevenueUpperBound(BuildPsi(IdentityInstance(m))), 1);
  }
}

TEST(BenchmarksTest, SpecialShapes) {
  BenchmarkReport twins = ComputeBenchmarks(MakePsi({{2, 5, 1}, {2, 5, 1}}));
  EXPECT_EQ(twins.b, 8);
  BenchmarkReport dominant = ComputeBenchmarks(MakePsi({{9, 9, 9}, {1, 4, 2}, {3, 0, 1}}));
  EXPECT_EQ(dominant.i_star, 0);
  EXPECT_EQ(dominant.b_tilde, 3 + 4 + 2);
  EXPECT_EQ(RevenueUpperBound(MakePsi({{0, 0}, {0, 0}})), 0);
  try {
    ComputeBenchmarks(MakePsi({{1, 2}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
}

TEST(PureTest, NamedInstances) {
  PureSchemeResult identity = OptimalPureRevenue(BuildPsi(IdentityInstance(3)));
  EXPECT_EQ(identity.revenue, Q(1, 3));
  EXPECT_EQ(PartitionRevenue(BuildPsi(IdentityInstance(3)), identity.partition), Q(1, 3));
  for (int k : {2, 4, 6}) {
    EXPECT_EQ(OptimalPureRevenue(BuildPsi(GapInstance(k))).revenue, Q(k, 2 * (k + 1)));
  }
  PureSchemeResult one = OptimalPureRevenue(MakePsi({{7}, {2}, {5}}));
  EXPECT_EQ(one.revenue, 5);
  EXPECT_EQ(one.partition, (std::vector<std::vector<int>>{{0}}));
}

TEST(PureTest, Guards) {
  try {
    OptimalPureRevenue(BuildPsi(IdentityInstance(11)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  try {
    OptimalPureRevenue(MakePsi({{1, 2}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
}

TEST(PureTest, RestrictedGrowthStrings) {
  std::vector<std::vector<int>> seen;
  ForEachRestrictedGrowthString(3, [&](const std::vector<int>& a) { seen.push_back(a); });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{
                      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}}));
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int m = 1; m <= 8; ++m) {
    long count = 0;
    ForEachRestrictedGrowthString(m, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(count, bell[m]) << m;
  }
}

TEST(PureTest, FirstMaximizerWins) {
  // All partitions of the zero matrix tie; the first string is all zeros.
  PureSchemeResult r = OptimalPureRevenue(MakePsi({{0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(r.partition, (std::vector<std::vector<int>>{{0, 1, 2}}));
}

TEST(PureTest, MatchesBruteForceOnCorpus) {
  for (int seed = 0; seed < testing::kCorpusSize; ++seed) {
    PsiMatrix psi = CorpusPsi(seed);
    PureSchemeResult r = OptimalPureRevenue(psi);
    EXPECT_EQ(r.revenue, BruteForcePureRevenue(psi)) << seed;
    EXPECT_EQ(SchemeRevenue(psi, PartitionScheme(r.partition)), r.revenue);
  }
}

TEST(BenchmarksTest, SandwichOnCorpus) {
  for (int seed = 0; seed < testing::kCorpusSize; ++seed) {
    BenchmarkReport r = ComputeBenchmarks(CorpusPsi(seed));
    EXPECT_LE(r.b_tilde, 2 * r.b) << seed;
    EXPECT_LE(r.b, r.b_tilde) << seed;
  }
}

TEST(GeneratorTest, GapInstances) {
  AuctionInstance k2 = GapInstance(2);
  EXPECT_EQ(k2.valuations(), (RationalMatrix{{3, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(GapInstance(4).valuation(0, 0), 5);
  EXPECT_EQ(GapInstance(4).num_bidders(), 5);
  for (int k : {3, 0, -2}) {
    try {
      GapInstance(k);
      ADD_FAILURE() << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadK);
    }
  }
}

TEST(GeneratorTest, SplitMix64ReferenceOutputs) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.Next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.Next(), 0x06C45D188009454FULL);
}

TEST(GeneratorTest, BelowIsInRangeAndCoversIt) {
  SplitMix64 rng(42);
  std::vector<int> hits(10);
  for (int k = 0; k < 2000; ++k) {
    uint64_t x = rng.Below(10);
    ASSERT_LT(x, 10u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 100);
}

TEST(GeneratorTest, RandomInstanceIsDeterministic) {
  EXPECT_EQ(RandomInstance(17, 3, 3, 9), RandomInstance(17, 3, 3, 9));
  EXPECT_FALSE(RandomInstance(17, 3, 3, 9) == RandomInstance(18, 3, 3, 9));
  AuctionInstance a = RandomInstance(5, 3, 3, 9);
  EXPECT_EQ(a.num_bidders(), 3);
  EXPECT_EQ(a.num_types(), 3);
  for (const auto& row : a.valuations()) {
    for (const Rational& v : row) {
      EXPECT_GE(v, 0);
      EXPECT_LE(v, 9);
      EXPECT_EQ(v.get_den(), 1);
    }
  }
  // Bidder-major draws of Below(10) from the same generator.
  SplitMix64 rng(5);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(a.valuation(i, j), Rational(static_cast<long>(rng.Below(10))));
    }
  }
}

}  // namespace
}  // namespace mixsig
