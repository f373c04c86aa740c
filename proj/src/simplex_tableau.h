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

// Dense two-phase simplex tableau shared by the exact and floating-point
// solvers. `Arith` supplies the number semantics:
//
//   T From(const Rational&) const;
//   bool IsZero(const T&) const;
//   bool IsPositive(const T&) const;
//   int Compare(const T&, const T&) const;     // -1, 0, +1
//   void Clean(T&) const;                      // flush round-off
//   void CheckPivot(const T& pivot, const T& column_max) const;
//   int max_pivots() const;                    // <= 0 means unlimited
//
// Column layout: structural variables, then one slack or surplus per <= / >=
// row, then one artificial per >= / = row, then the right-hand side. The last
// tableau row holds reduced costs d_j = c_j - c_B B^-1 A_j and, in its
// right-hand-side slot, minus the current objective value.

#ifndef MIXSIG_SRC_SIMPLEX_TABLEAU_H_
#define MIXSIG_SRC_SIMPLEX_TABLEAU_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixsig/error.h"
#include "mixsig/lp.h"

namespace mixsig::internal {

template <typename T, typename Arith>
class SimplexTableau {
 public:
  SimplexTableau(const LpProblem& problem, const Arith& arith)
      : arith_(arith), num_structural_(problem.num_vars) {
    rows_ = static_cast<int>(problem.constraints.size());
    int num_slack = 0;
    int num_artificial = 0;
    for (const auto& c : problem.constraints) {
      Relation rel = Normalized(c);
      if (rel != Relation::kEqual) ++num_slack;
      if (rel != Relation::kLessEqual) ++num_artificial;
    }
    cols_ = num_structural_ + num_slack + num_artificial;
    stride_ = cols_ + 1;
    cells_.assign(static_cast<size_t>(rows_ + 1) * stride_, T{});
    basis_.assign(rows_, -1);
    artificial_.assign(cols_, false);
    blocked_.assign(cols_, false);

    int next_slack = num_structural_;
    int next_artificial = num_structural_ + num_slack;
    for (int r = 0; r < rows_; ++r) {
      const LinearConstraint& c = problem.constraints[r];
      const bool flip = sgn(c.rhs) < 0;
      Relation rel = Normalized(c);
      for (int j = 0; j < num_structural_; ++j) {
        if (sgn(c.coeffs[j]) == 0) continue;
        at(r, j) = arith_.From(flip ? Rational(-c.coeffs[j]) : c.coeffs[j]);
      }
      at(r, cols_) = arith_.From(flip ? Rational(-c.rhs) : c.rhs);
      if (rel == Relation::kLessEqual) {
        at(r, next_slack) = arith_.From(1);
        basis_[r] = next_slack++;
      } else {
        if (rel == Relation::kGreaterEqual) at(r, next_slack++) = arith_.From(-1);
        at(r, next_artificial) = arith_.From(1);
        artificial_[next_artificial] = true;
        basis_[r] = next_artificial++;
      }
    }
    for (int j = 0; j < num_structural_; ++j) {
      objective_.push_back(arith_.From(problem.objective[j]));
    }
    has_artificial_ = num_artificial > 0;
  }

  BasicLpSolution<T> Solve() {
    BasicLpSolution<T> result;
    if (has_artificial_) {
      std::vector<T> phase_one(cols_, T{});
      for (int j = 0; j < cols_; ++j) {
        if (artificial_[j]) phase_one[j] = arith_.From(-1);
      }
      LoadObjective(phase_one);
      // Phase one is bounded above by zero, so it always ends optimal.
      Iterate();
      T infeasibility = at(rows_, cols_);  // minus the phase-one optimum
      if (arith_.IsPositive(infeasibility)) {
        result.status = LpStatus::kInfeasible;
        result.pivots = pivots_;
        return result;
      }
      DriveOutArtificials();
      for (int j = 0; j < cols_; ++j) {
        if (artificial_[j]) blocked_[j] = true;
      }
    }
    std::vector<T> phase_two(cols_, T{});
    for (int j = 0; j < num_structural_; ++j) phase_two[j] = objective_[j];
    LoadObjective(phase_two);
    if (!Iterate()) {
      result.status = LpStatus::kUnbounded;
      result.pivots = pivots_;
      return result;
    }
    result.status = LpStatus::kOptimal;
    result.values.assign(num_structural_, T{});
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < num_structural_) result.values[basis_[r]] = at(r, cols_);
    }
    result.objective_value = -at(rows_, cols_);
    result.pivots = pivots_;
    return result;
  }

 private:
  static Relation Normalized(const LinearConstraint& c) {
    if (sgn(c.rhs) >= 0 || c.relation == Relation::kEqual) return c.relation;
    return c.relation == Relation::kLessEqual ? Relation::kGreaterEqual
                                              : Relation::kLessEqual;
  }

  T& at(int r, int c) { return cells_[static_cast<size_t>(r) * stride_ + c]; }

  void LoadObjective(const std::vector<T>& costs) {
    for (int j = 0; j <= cols_; ++j) at(rows_, j) = T{};
    for (int j = 0; j < cols_; ++j) at(rows_, j) = costs[j];
    for (int r = 0; r < rows_; ++r) {
      const T& cb = costs[basis_[r]];
      if (arith_.IsZero(cb)) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (!arith_.IsZero(at(r, j))) at(rows_, j) -= cb * at(r, j);
      }
    }
    for (int j = 0; j <= cols_; ++j) arith_.Clean(at(rows_, j));
    for (int r = 0; r < rows_; ++r) at(rows_, basis_[r]) = T{};
  }

  // Runs pivots until optimal (true) or unbounded (false). Bland's rule:
  // the lowest-index improving column enters; among tied ratios the row whose
  // basic variable has the lowest index leaves.
  bool Iterate() {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!blocked_[j] && arith_.IsPositive(at(rows_, j))) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      T best_ratio{};
      for (int r = 0; r < rows_; ++r) {
        const T& a = at(r, entering);
        if (!arith_.IsPositive(a)) continue;
        T ratio = at(r, cols_) / a;
        if (leaving < 0) {
          leaving = r;
          best_ratio = ratio;
          continue;
        }
        int cmp = arith_.Compare(ratio, best_ratio);
        if (cmp < 0 || (cmp == 0 && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
    }
  }

  void DriveOutArtificials() {
    for (int r = 0; r < rows_; ++r) {
      if (!artificial_[basis_[r]]) continue;
      for (int j = 0; j < cols_; ++j) {
        if (!artificial_[j] && !arith_.IsZero(at(r, j))) {
          Pivot(r, j);
          break;
        }
      }
      // A row with no structural or slack entry left is redundant; its
      // artificial stays basic at zero and never leaves again.
    }
  }

  void Pivot(int r, int c) {
    if (arith_.max_pivots() > 0 && pivots_ >= arith_.max_pivots()) {
      throw Error(ErrorCode::kNumericallyUnstable,
                  "simplex exceeded " + std::to_string(arith_.max_pivots()) +
                      " pivots");
    }
    ++pivots_;
    T column_max{};
    for (int k = 0; k < rows_; ++k) {
      T mag = at(k, c) < T{} ? T(-at(k, c)) : at(k, c);
      if (mag > column_max) column_max = mag;
    }
    arith_.CheckPivot(at(r, c), column_max);

    T inverse = T(1) / at(r, c);
    nonzero_.clear();
    for (int j = 0; j <= cols_; ++j) {
      T& x = at(r, j);
      if (arith_.IsZero(x)) continue;
      x *= inverse;
      nonzero_.push_back(j);
    }
    at(r, c) = T(1);
    for (int k = 0; k <= rows_; ++k) {
      if (k == r) continue;
      if (arith_.IsZero(at(k, c))) continue;
      T factor = at(k, c);
      T* row_k = &at(k, 0);
      const T* row_r = &at(r, 0);
      for (int j : nonzero_) {
        row_k[j] -= factor * row_r[j];
        arith_.Clean(row_k[j]);
      }
      row_k[c] = T{};
    }
    basis_[r] = c;
  }

  const Arith& arith_;
  int num_structural_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  int stride_ = 0;
  bool has_artificial_ = false;
  int pivots_ = 0;
  std::vector<T> cells_;
  std::vector<T> objective_;
  std::vector<int> basis_;
  std::vector<bool> artificial_;
  std::vector<bool> blocked_;
  std::vector<int> nonzero_;
};

}  // namespace mixsig::internal

#endif  // MIXSIG_SRC_SIMPLEX_TABLEAU_H_
