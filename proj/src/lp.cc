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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mixsig/error.h"
#include "simplex_tableau.h"

namespace mixsig {

namespace {

struct ExactArith {
  Rational From(const Rational& x) const { return x; }
  bool IsZero(const Rational& x) const { return sgn(x) == 0; }
  bool IsPositive(const Rational& x) const { return sgn(x) > 0; }
  int Compare(const Rational& a, const Rational& b) const {
    return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0);
  }
  void Clean(Rational&) const {}
  void CheckPivot(const Rational&, const Rational&) const {}
  int max_pivots() const { return 0; }
};

struct FloatArith {
  double tolerance;

  double From(const Rational& x) const { return x.get_d(); }
  bool IsZero(double x) const { return std::fabs(x) <= tolerance; }
  bool IsPositive(double x) const { return x > tolerance; }
  int Compare(double a, double b) const {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    if (std::fabs(a - b) <= tolerance * scale) return 0;
    return a < b ? -1 : 1;
  }
  void Clean(double& x) const {
    if (std::fabs(x) <= tolerance * 1e-3) x = 0.0;
  }
  void CheckPivot(double pivot, double column_max) const {
    if (std::fabs(pivot) < tolerance * column_max) {
      throw Error(ErrorCode::kNumericallyUnstable,
                  "pivot magnitude fell below tolerance relative to its column");
    }
  }
  int max_pivots() const { return 200000; }
};

void CheckCoefficientRange(const LpProblem& problem, double tolerance) {
  double smallest = 0.0;
  double largest = 0.0;
  auto visit = [&](const Rational& q) {
    if (sgn(q) == 0) return;
    double mag = std::fabs(q.get_d());
    if (smallest == 0.0 || mag < smallest) smallest = mag;
    largest = std::max(largest, mag);
  };
  for (const Rational& c : problem.objective) visit(c);
  for (const auto& row : problem.constraints) {
    for (const Rational& a : row.coeffs) visit(a);
    visit(row.rhs);
  }
  if (smallest == 0.0) return;
  if (smallest < tolerance || largest / smallest > 1.0 / tolerance) {
    std::ostringstream msg;
    msg << "coefficient magnitudes span [" << smallest << ", " << largest
        << "], beyond what tolerance " << tolerance << " can resolve";
    throw Error(ErrorCode::kNumericallyUnstable, msg.str());
  }
}

void AuditFloatSolution(const LpProblem& problem, FloatLpSolution& solution,
                        double tolerance) {
  for (double& x : solution.values) {
    if (x < -tolerance) {
      throw Error(ErrorCode::kNumericallyUnstable,
                  "negative variable in floating-point solution");
    }
    if (x < 0.0) x = 0.0;
  }
  for (const auto& row : problem.constraints) {
    double lhs = 0.0;
    double scale = std::fabs(row.rhs.get_d());
    for (int j = 0; j < problem.num_vars; ++j) {
      double term = row.coeffs[j].get_d() * solution.values[j];
      lhs += term;
      scale += std::fabs(term);
    }
    double slack = row.rhs.get_d() - lhs;
    double allowed = tolerance * (1.0 + scale);
    bool ok = true;
    switch (row.relation) {
      case Relation::kLessEqual: ok = slack >= -allowed; break;
      case Relation::kGreaterEqual: ok = slack <= allowed; break;
      case Relation::kEqual: ok = std::fabs(slack) <= allowed; break;
    }
    if (!ok) {
      throw Error(ErrorCode::kNumericallyUnstable,
                  "floating-point solution violates a constraint");
    }
  }
  double value = 0.0;
  for (int j = 0; j < problem.num_vars; ++j) {
    value += problem.objective[j].get_d() * solution.values[j];
  }
  solution.objective_value = value;
}

}  // namespace

int LpProblem::AddVariable(const Rational& cost, std::string name) {
  objective.push_back(cost);
  for (auto& row : constraints) row.coeffs.emplace_back(0);
  if (!name.empty() || !var_names.empty()) {
    var_names.resize(num_vars);
    var_names.push_back(std::move(name));
  }
  return num_vars++;
}

void LpProblem::AddConstraint(std::vector<Rational> coeffs, Relation relation,
                              Rational rhs) {
  constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LpProblem::Validate() const {
  if (num_vars < 0) {
    throw Error(ErrorCode::kMalformedProblem, "negative variable count");
  }
  if (static_cast<int>(objective.size()) != num_vars) {
    throw Error(ErrorCode::kMalformedProblem,
                "objective has " + std::to_string(objective.size()) +
                    " coefficients for " + std::to_string(num_vars) +
                    " variables");
  }
  for (size_t r = 0; r < constraints.size(); ++r) {
    if (static_cast<int>(constraints[r].coeffs.size()) != num_vars) {
      throw Error(ErrorCode::kMalformedProblem,
                  "constraint " + std::to_string(r) + " has " +
                      std::to_string(constraints[r].coeffs.size()) +
                      " coefficients for " + std::to_string(num_vars) +
                      " variables");
    }
  }
  if (!var_names.empty() && static_cast<int>(var_names.size()) != num_vars) {
    throw Error(ErrorCode::kMalformedProblem,
                "var_names must be empty or have one entry per variable");
  }
}

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "OPTIMAL";
    case LpStatus::kInfeasible: return "INFEASIBLE";
    case LpStatus::kUnbounded: return "UNBOUNDED";
  }
  return "UNKNOWN";
}

LpSolution SolveExact(const LpProblem& problem) {
  problem.Validate();
  ExactArith arith;
  internal::SimplexTableau<Rational, ExactArith> tableau(problem, arith);
  return tableau.Solve();
}

FloatLpSolution SolveFloat(const LpProblem& problem, double tolerance) {
  problem.Validate();
  if (!(tolerance > 0.0)) {
    throw Error(ErrorCode::kMalformedProblem, "tolerance must be positive");
  }
  CheckCoefficientRange(problem, tolerance);
  FloatArith arith{tolerance};
  internal::SimplexTableau<double, FloatArith> tableau(problem, arith);
  FloatLpSolution solution = tableau.Solve();
  if (solution.status == LpStatus::kOptimal) {
    AuditFloatSolution(problem, solution, tolerance);
  }
  return solution;
}

bool SatisfiesConstraints(const LpProblem& problem,
                          const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != problem.num_vars) return false;
  for (const Rational& x : values) {
    if (sgn(x) < 0) return false;
  }
  for (const auto& row : problem.constraints) {
    Rational lhs = 0;
    for (int j = 0; j < problem.num_vars; ++j) {
      if (sgn(row.coeffs[j]) != 0) lhs += row.coeffs[j] * values[j];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < row.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

Rational EvaluateObjective(const LpProblem& problem,
                           const std::vector<Rational>& values) {
  Rational total = 0;
  for (int j = 0; j < problem.num_vars; ++j) {
    total += problem.objective[j] * values[j];
  }
  return total;
}

std::string DumpLp(const LpProblem& problem) {
  auto name = [&](int j) {
    return problem.var_names.empty() ? "x" + std::to_string(j)
                                     : problem.var_names[j];
  };
  auto linear = [&](const std::vector<Rational>& coeffs) {
    std::string out;
    for (int j = 0; j < problem.num_vars; ++j) {
      if (sgn(coeffs[j]) == 0) continue;
      if (!out.empty()) out += " + ";
      out += coeffs[j].get_str() + " " + name(j);
    }
    return out.empty() ? std::string("0") : out;
  };
  std::string out = "max: " + linear(problem.objective) + "\n";
  for (const auto& row : problem.constraints) {
    const char* rel = row.relation == Relation::kLessEqual      ? "<="
                      : row.relation == Relation::kGreaterEqual ? ">="
                                                                : "=";
    out += linear(row.coeffs) + " " + rel + " " + row.rhs.get_str() + "\n";
  }
  return out;
}

}  // namespace mixsig
