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

#include "mixsig/lp.h"

#include <gtest/gtest.h>

#include <cmath>

#include "mixsig/error.h"
#include "test_util.h"

namespace mixsig {
namespace {

using ::mixsig::testing::RandomLp;
using ::mixsig::testing::VertexEnumerationOptimum;

Rational Q(long num, long den = 1) { return MakeRational(num, den); }

LpProblem MakeLp(std::vector<Rational> objective,
                 std::vector<LinearConstraint> constraints) {
  LpProblem lp;
  for (const Rational& c : objective) lp.AddVariable(c);
  for (auto& c : constraints) {
    lp.AddConstraint(std::move(c.coeffs), c.relation, std::move(c.rhs));
  }
  return lp;
}

constexpr Relation kLe = Relation::kLessEqual;
constexpr Relation kGe = Relation::kGreaterEqual;
constexpr Relation kEq = Relation::kEqual;

TEST(LpTest, OneVariable) {
  LpProblem lp = MakeLp({1}, {{{1}, kLe, 1}});
  LpSolution s = SolveExact(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective_value, 1);
  EXPECT_EQ(s.values, (std::vector<Rational>{1}));
  FloatLpSolution f = SolveFloat(lp);
  ASSERT_EQ(f.status, LpStatus::kOptimal);
  EXPECT_NEAR(f.objective_value, 1.0, 1e-9);
}

TEST(LpTest, Infeasible) {
  LpProblem lp = MakeLp({1}, {{{1}, kGe, 2}, {{1}, kLe, 1}});
  EXPECT_EQ(SolveExact(lp).status, LpStatus::kInfeasible);
  EXPECT_EQ(SolveFloat(lp).status, LpStatus::kInfeasible);
}

TEST(LpTest, DegenerateOptimumFace) {
  LpProblem lp = MakeLp({1, 1}, {{{1, 1}, kLe, 1}});
  LpSolution s = SolveExact(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective_value, 1);
  EXPECT_TRUE(SatisfiesConstraints(lp, s.values));
  EXPECT_NEAR(SolveFloat(lp).objective_value, 1.0, 1e-9);
}

TEST(LpTest, Unbounded) {
  LpProblem lp = MakeLp({1, -1}, {{{1, -1}, kGe, 0}});
  EXPECT_EQ(SolveExact(lp).status, LpStatus::kUnbounded);
  EXPECT_EQ(SolveFloat(lp).status, LpStatus::kUnbounded);
}

TEST(LpTest, EqualityAndNegativeRhs) {
  // max x + 2y  s.t.  x + y = 3,  -x + y >= -1,  y <= 5/2
  LpProblem lp = MakeLp({1, 2}, {{{1, 1}, kEq, 3}, {{-1, 1}, kGe, -1},
                                 {{0, 1}, kLe, Q(5, 2)}});
  LpSolution s = SolveExact(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective_value, Q(11, 2));
  EXPECT_EQ(s.values, (std::vector<Rational>{Q(1, 2), Q(5, 2)}));
}

TEST(LpTest, RedundantEqualityRows) {
  LpProblem lp = MakeLp({1, 1}, {{{1, 1}, kEq, 2}, {{2, 2}, kEq, 4}, {{1, 0}, kLe, 1}});
  LpSolution s = SolveExact(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective_value, 2);
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(LpTest, BealeCyclingExampleTerminates) {
  LpProblem lp = MakeLp({Q(3, 4), -150, Q(1, 50), -6},
                        {{{Q(1, 4), -60, Q(-1, 25), 9}, kLe, 0},
                         {{Q(1, 2), -90, Q(-1, 50), 3}, kLe, 0},
                         {{0, 0, 1, 0}, kLe, 1}});
  LpSolution s = SolveExact(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective_value, Q(1, 20));
  EXPECT_EQ(s.values, (std::vector<Rational>{Q(1, 25), 0, 1, 0}));
  EXPECT_NEAR(SolveFloat(lp).objective_value, 0.05, 1e-9);
}

// Chvatal's degenerate example, also cycling-prone.
TEST(LpTest, ChvatalCyclingExampleTerminates) {
  LpProblem lp = MakeLp({10, -57, -9, -24},
                        {{{Q(1, 2), Q(-11, 2), Q(-5, 2), 9}, kLe, 0},
                         {{Q(1, 2), Q(-3, 2), Q(-1, 2), 1}, kLe, 0},
                         {{1, 0, 0, 0}, kLe, 1}});
  LpSolution s = SolveExact(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective_value, 1);
  EXPECT_TRUE(SatisfiesConstraints(lp, s.values));
}

TEST(LpTest, MalformedProblems) {
  LpProblem lp = MakeLp({1, 1}, {{{1, 1}, kLe, 1}});
  lp.constraints[0].coeffs.pop_back();
  for (auto solve : {+[](const LpProblem& p) { SolveExact(p); },
                     +[](const LpProblem& p) { SolveFloat(p); }}) {
    try {
      solve(lp);
      ADD_FAILURE() << "accepted a malformed problem";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedProblem);
    }
  }
  LpProblem bad_objective = MakeLp({1}, {});
  bad_objective.objective.push_back(2);
  EXPECT_THROW(bad_objective.Validate(), Error);
}

TEST(LpTest, IllConditionedNeverSilentlyWrong) {
  Rational tiny = MakeRational(1, 1000000000000L);
  LpProblem lp = MakeLp({1, 1}, {{{tiny, 1}, kLe, 1}, {{1, tiny}, kLe, 1000000000000L}});
  LpSolution exact = SolveExact(lp);
  ASSERT_EQ(exact.status, LpStatus::kOptimal);
  try {
    FloatLpSolution f = SolveFloat(lp);
    ASSERT_EQ(f.status, LpStatus::kOptimal);
    double q = exact.objective_value.get_d();
    EXPECT_LE(std::abs(f.objective_value - q), 1e-6 * std::max(1.0, std::abs(q)));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNumericallyUnstable);
  }
}

TEST(LpTest, DumpFormat) {
  LpProblem lp = MakeLp({1, Q(-1, 2)}, {{{1, 1}, kLe, 1}, {{2, 0}, kGe, Q(1, 3)}});
  std::string dump = DumpLp(lp);
  EXPECT_EQ(dump.rfind("max:", 0), 0u) << dump;
  EXPECT_NE(dump.find("<= 1"), std::string::npos) << dump;
  EXPECT_NE(dump.find(">= 1/3"), std::string::npos) << dump;
}

// Exact simplex against vertex enumeration on small boxed LPs.
TEST(LpTest, MatchesVertexEnumeration) {
  SplitMix64 rng(77);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int vars = 1 + static_cast<int>(rng.Below(4));
    int rows = 1 + static_cast<int>(rng.Below(4));
    LpProblem lp = RandomLp(rng, vars, rows, /*boxed=*/true);
    std::optional<Rational> oracle = VertexEnumerationOptimum(lp);
    LpSolution s = SolveExact(lp);
    if (!oracle) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible) << DumpLp(lp);
      ++infeasible;
      continue;
    }
    ASSERT_EQ(s.status, LpStatus::kOptimal) << DumpLp(lp);
    EXPECT_EQ(s.objective_value, *oracle) << DumpLp(lp);
    EXPECT_TRUE(SatisfiesConstraints(lp, s.values));
    EXPECT_EQ(EvaluateObjective(lp, s.values), s.objective_value);
    ++optimal;
  }
  EXPECT_GT(optimal, 30);
  EXPECT_GT(infeasible, 5);
}

// Adding "objective >= reported optimum" and re-solving gives the same value.
TEST(LpTest, ResolveIsStable) {
  SplitMix64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LpProblem lp = RandomLp(rng, 2 + static_cast<int>(rng.Below(6)),
                            1 + static_cast<int>(rng.Below(6)), /*boxed=*/false);
    LpSolution s = SolveExact(lp);
    if (s.status != LpStatus::kOptimal) continue;
    LpProblem again = lp;
    again.AddConstraint(lp.objective, kGe, s.objective_value);
    LpSolution t = SolveExact(again);
    ASSERT_EQ(t.status, LpStatus::kOptimal);
    EXPECT_EQ(t.objective_value, s.objective_value);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(LpTest, FloatAgreesWithExact) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    LpProblem lp = RandomLp(rng, 2 + static_cast<int>(rng.Below(10)),
                            1 + static_cast<int>(rng.Below(10)), rng.Below(2) == 0);
    LpSolution exact = SolveExact(lp);
    FloatLpSolution f = SolveFloat(lp);
    ASSERT_EQ(f.status, exact.status) << DumpLp(lp);
    if (exact.status != LpStatus::kOptimal) continue;
    double q = exact.objective_value.get_d();
    EXPECT_LE(std::abs(f.objective_value - q), 1e-6 * std::max(1.0, std::abs(q)));
  }
}

}  // namespace
}  // namespace mixsig
