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

#include "mixsig/model.h"

#include <gtest/gtest.h>

#include "mixsig/benchmarks.h"
#include "mixsig/error.h"
#include "test_util.h"

namespace mixsig {
namespace {

using ::mixsig::testing::CorpusInstance;
using ::mixsig::testing::kCorpusSize;
using ::mixsig::testing::MakePsi;
using ::mixsig::testing::RandomScheme;

Rational Q(long num, long den = 1) { return MakeRational(num, den); }

ErrorCode CodeOf(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

TEST(ModelTest, PsiOfIdentityAndGapInstances) {
  PsiMatrix identity = BuildPsi(IdentityInstance(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(identity(i, j), i == j ? Q(1, 3) : 0);
  }
  PsiMatrix gap = BuildPsi(GapInstance(2));
  EXPECT_EQ(gap.entries(),
            (RationalMatrix{{1, 0, 0}, {0, Q(1, 3), 0}, {0, 0, Q(1, 3)}}));
  EXPECT_EQ(ToDivisible(GapInstance(2)), gap);
}

TEST(ModelTest, InstanceValidation) {
  EXPECT_EQ(CodeOf([] { AuctionInstance::Create({{1, 2}}, {Q(1, 2), Q(2, 5)}); }),
            ErrorCode::kBadPrior);
  EXPECT_EQ(CodeOf([] { AuctionInstance::Create({{1, 2}}, {0, 1}); }),
            ErrorCode::kBadPrior);
  EXPECT_EQ(CodeOf([] { AuctionInstance::Create({{1, -2}}, {Q(1, 2), Q(1, 2)}); }),
            ErrorCode::kInvalidInstance);
  EXPECT_EQ(CodeOf([] { AuctionInstance::WithUniformPrior({{1, 2}, {3}}); }),
            ErrorCode::kInvalidInstance);
  EXPECT_EQ(CodeOf([] { AuctionInstance::WithUniformPrior({}); }),
            ErrorCode::kInvalidInstance);
  try {
    AuctionInstance::Create({{1, 2}}, {Q(9, 20), Q(9, 20)});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("9/10"), std::string::npos) << e.what();
  }
}

TEST(ModelTest, WinnerTables) {
  WinnerTables t = ComputeWinnerTables(BuildPsi(IdentityInstance(3)));
  EXPECT_EQ(t.first, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(t.second, (std::vector<std::optional<int>>{1, 0, 0}));
  EXPECT_EQ(t.won, (std::vector<std::vector<int>>{{0}, {1}, {2}}));

  WinnerTables f = ComputeWinnerTables(Figure2Psi());
  EXPECT_EQ(f.first, (std::vector<int>{0, 0, 2}));
  EXPECT_EQ(f.won, (std::vector<std::vector<int>>{{0, 1}, {}, {2}}));

  WinnerTables single = ComputeWinnerTables(MakePsi({{1, 2, 3}}));
  for (const auto& w2 : single.second) EXPECT_FALSE(w2.has_value());
}

TEST(ModelTest, BidsAndRevenue) {
  PsiMatrix identity = BuildPsi(IdentityInstance(3));
  Signal pair = Signal::Create({{0, Q(1, 2)}, {1, Q(1, 2)}});
  EXPECT_EQ(SignalBids(identity, pair), (std::vector<Rational>{Q(1, 6), Q(1, 6), 0}));
  EXPECT_EQ(SignalRevenue(identity, pair), Q(1, 6));
  for (int j = 0; j < 3; ++j) {
    std::vector<Rational> column = {identity(0, j), identity(1, j), identity(2, j)};
    EXPECT_EQ(SignalBids(identity, Signal::Singleton(j)), column);
  }

  PsiMatrix gap = BuildPsi(GapInstance(2));
  EXPECT_EQ(SignalBids(gap, Signal::Create({{0, Q(1, 2)}, {1, 1}})),
            (std::vector<Rational>{Q(1, 2), Q(1, 3), 0}));

  EXPECT_EQ(SignalRevenue(MakePsi({{4, 5}}), Signal::Singleton(1)), 0);
}

TEST(ModelTest, SchemeRevenueExamples) {
  PsiMatrix identity = BuildPsi(IdentityInstance(3));
  SignalingScheme mixed;
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    mixed.signals.push_back(Signal::Create({{a, Q(1, 2)}, {b, Q(1, 2)}}));
  }
  EXPECT_TRUE(mixed.IsCanonical(3));
  EXPECT_EQ(SchemeRevenue(identity, mixed), Q(1, 2));
  RevenueSplit split = SplitRevenue(identity, mixed);
  EXPECT_EQ(split.singleton, 0);
  EXPECT_EQ(split.non_singleton, Q(1, 2));

  SignalingScheme pure;
  pure.signals = {Signal::Create({{0, 1}, {1, 1}}), Signal::Singleton(2)};
  EXPECT_EQ(SchemeRevenue(identity, pure), Q(1, 3));
  EXPECT_EQ(SchemeRevenue(identity, SignalingScheme{}), 0);

  SignalingScheme too_much;
  too_much.signals = {Signal::Singleton(0), Signal::Create({{0, Q(1, 2)}, {1, 1}})};
  EXPECT_FALSE(too_much.IsFeasible(3));
  EXPECT_EQ(CodeOf([&] { SchemeRevenue(identity, too_much); }),
            ErrorCode::kInfeasibleScheme);
}

TEST(ModelTest, SignalValidation) {
  Signal s = Signal::Create({{0, 0}, {2, Q(1, 4)}});
  EXPECT_EQ(s.support(), (std::vector<int>{2}));
  EXPECT_TRUE(s.is_singleton());
  EXPECT_EQ(s.mass(0), 0);
  EXPECT_EQ(CodeOf([] { Signal::Create({{0, 0}}); }), ErrorCode::kInvalidSignal);
  EXPECT_EQ(CodeOf([] { Signal::Create({{0, Q(3, 2)}}); }), ErrorCode::kInvalidSignal);
  EXPECT_EQ(CodeOf([] { Signal::Create({{0, -1}}); }), ErrorCode::kInvalidSignal);
}

TEST(ModelTest, PosteriorValues) {
  AuctionInstance identity = IdentityInstance(3);
  PosteriorValues pv =
      ComputePosteriorValues(identity, Signal::Create({{0, Q(1, 2)}, {1, Q(1, 2)}}));
  EXPECT_EQ(pv.signal_probability, Q(1, 3));
  EXPECT_EQ(pv.values, (std::vector<Rational>{Q(1, 2), Q(1, 2), 0}));

  PosteriorValues gap =
      ComputePosteriorValues(GapInstance(2), Signal::Create({{0, Q(1, 2)}, {1, 1}}));
  EXPECT_EQ(gap.signal_probability, Q(1, 2));
  EXPECT_EQ(gap.values, (std::vector<Rational>{1, Q(2, 3), 0}));

  AuctionInstance inst = AuctionInstance::Create({{2, 7}, {5, 1}}, {Q(1, 4), Q(3, 4)});
  EXPECT_EQ(ComputePosteriorValues(inst, Signal::Singleton(1)).values,
            (std::vector<Rational>{7, 1}));
}

TEST(ModelTest, DivisibleConversion) {
  PsiMatrix identity = MakePsi({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  AuctionInstance back = FromDivisible(identity);
  EXPECT_EQ(back.prior(), (std::vector<Rational>{Q(1, 3), Q(1, 3), Q(1, 3)}));
  EXPECT_EQ(back.valuation(1, 1), 3);
  EXPECT_EQ(back.valuation(0, 1), 0);

  std::vector<Rational> prior = {Q(1, 2), Q(1, 4), Q(1, 4)};
  EXPECT_EQ(BuildPsi(FromDivisible(Figure2Psi(), prior)), Figure2Psi());
  EXPECT_EQ(CodeOf([&] { FromDivisible(Figure2Psi(), std::vector<Rational>{0, Q(1, 2), Q(1, 2)}); }),
            ErrorCode::kBadPrior);
  EXPECT_EQ(CodeOf([&] { FromDivisible(Figure2Psi(), std::vector<Rational>{Q(1, 2), Q(1, 2), Q(1, 2)}); }),
            ErrorCode::kBadPrior);
}

// Properties over the random corpus with random feasible schemes.
class ModelPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(ModelPropertyTest, HoldsOnCorpus) {
  const int seed = GetParam();
  AuctionInstance instance = CorpusInstance(seed);
  PsiMatrix psi = BuildPsi(instance);
  SplitMix64 rng(1000 + seed);
  const int m = psi.num_types();
  const int n = psi.num_bidders();
  Rational bound = RevenueUpperBound(psi);
  for (int trial = 0; trial < 5; ++trial) {
    SignalingScheme scheme = testing::RandomScheme(rng, m);
    ASSERT_TRUE(scheme.IsFeasible(m));
    Rational revenue = SchemeRevenue(psi, scheme);

    // Scaling.
    Rational c = MakeRational(1 + static_cast<long>(rng.Below(7)),
                              1 + static_cast<long>(rng.Below(5)));
    PsiMatrix scaled = psi.Scaled(c);
    EXPECT_EQ(SchemeRevenue(scaled, scheme), c * revenue);
    EXPECT_EQ(ComputeWinnerTables(scaled).first, ComputeWinnerTables(psi).first);
    EXPECT_EQ(ComputeWinnerTables(scaled).second, ComputeWinnerTables(psi).second);

    // Model equivalence and bid ordering.
    Rational via_posteriors = 0;
    for (const Signal& s : scheme.signals) {
      std::vector<Rational> bids = SignalBids(psi, s);
      EXPECT_EQ(SignalBids(scaled, s)[0], c * bids[0]);
      PosteriorValues pv = ComputePosteriorValues(instance, s);
      std::vector<Rational> sorted = pv.values;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      if (n >= 2) via_posteriors += pv.signal_probability * sorted[1];
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          EXPECT_EQ(pv.values[a] < pv.values[b], bids[a] < bids[b]);
        }
      }
    }
    EXPECT_EQ(via_posteriors, revenue);

    // Split and bound.
    RevenueSplit split = SplitRevenue(psi, scheme);
    EXPECT_EQ(split.singleton + split.non_singleton, revenue);
    EXPECT_LE(revenue, bound);
  }
  // Round trip with a random prior.
  std::vector<Rational> prior(m);
  long total = 0;
  std::vector<long> w(m);
  for (int j = 0; j < m; ++j) total += w[j] = 1 + static_cast<long>(rng.Below(9));
  for (int j = 0; j < m; ++j) prior[j] = MakeRational(w[j], total);
  EXPECT_EQ(BuildPsi(FromDivisible(psi, prior)), psi);
}

INSTANTIATE_TEST_SUITE_P(Corpus, ModelPropertyTest,
                         ::testing::Range(0, kCorpusSize, 4));

}  // namespace
}  // namespace mixsig
