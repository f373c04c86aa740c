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

// Dense linear programs: maximize c.x subject to rows of <=, >= or = and
// x >= 0. Solved by the two-phase primal simplex method with Bland's rule,
// either exactly over the rationals or in double precision.

#ifndef MIXSIG_LP_H_
#define MIXSIG_LP_H_

#include <string>
#include <string_view>
#include <vector>

#include "mixsig/rational.h"

namespace mixsig {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct LpProblem {
  int num_vars = 0;
  std::vector<Rational> objective;  // maximized
  std::vector<LinearConstraint> constraints;
  std::vector<std::string> var_names;  // empty, or one label per variable

  // Appends a variable with objective coefficient `cost`; existing
  // constraints get a zero coefficient. Returns its index.
  int AddVariable(const Rational& cost, std::string name = {});
  void AddConstraint(std::vector<Rational> coeffs, Relation relation,
                     Rational rhs);

  // Throws Error(kMalformedProblem) on any dimension mismatch.
  void Validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view LpStatusName(LpStatus status);

template <typename T>
struct BasicLpSolution {
  LpStatus status = LpStatus::kInfeasible;
  T objective_value{};   // set when kOptimal
  std::vector<T> values; // a basic optimal point when kOptimal
  int pivots = 0;
};

using LpSolution = BasicLpSolution<Rational>;
using FloatLpSolution = BasicLpSolution<double>;

LpSolution SolveExact(const LpProblem& problem);

// Same algorithm in double precision. Entries within `tolerance` of zero are
// treated as zero. Throws Error(kNumericallyUnstable) when the data has
// nonzero coefficients below `tolerance`, when a pivot is tiny relative to
// its column, or when the returned point fails the feasibility audit.
FloatLpSolution SolveFloat(const LpProblem& problem, double tolerance = 1e-9);

// Exact check of every constraint and of nonnegativity.
bool SatisfiesConstraints(const LpProblem& problem,
                          const std::vector<Rational>& values);

Rational EvaluateObjective(const LpProblem& problem,
                           const std::vector<Rational>& values);

// Human-readable dump, one row per line. Not a stable format.
std::string DumpLp(const LpProblem& problem);

}  // namespace mixsig

#endif  // MIXSIG_LP_H_
