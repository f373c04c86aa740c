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

#include "mixsig/scheme_optimizer.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

#include "mixsig/error.h"

namespace mixsig {

namespace {

void RequireTwoBidders(const PsiMatrix& psi) {
  if (psi.num_bidders() < 2) {
    throw Error(ErrorCode::kDegenerate,
                "a second-price auction needs at least two bidders");
  }
}

std::string SubsetLabel(uint32_t subset, int num_types) {
  std::string label = "{";
  for (int j = 0; j < num_types; ++j) {
    if (!(subset & (1u << j))) continue;
    if (label.size() > 1) label += ",";
    label += std::to_string(j);
  }
  return label + "}";
}

// Adds "bid of `high` >= bid of `low` within `block`", i.e.
// sum_j y_j (psi[low][j] - psi[high][j]) <= 0. Rows that are identically
// zero are dropped.
void AddBidOrder(LpProblem& lp, const PsiMatrix& psi, const SignalBlock& block,
                 int high, int low, Relation relation = Relation::kLessEqual) {
  std::vector<Rational> row(lp.num_vars);
  bool any = false;
  for (const TypeVar& tv : block.vars) {
    row[tv.var] = psi(low, tv.type) - psi(high, tv.type);
    any = any || sgn(row[tv.var]) != 0;
  }
  if (!any) return;
  lp.AddConstraint(std::move(row), relation, 0);
}

// Adds, for every type, sum of its variables <= 1. Expects the variables to be
// final.
void AddTypeMassRows(LpProblem& lp, int num_types,
                     const std::vector<SignalBlock>& blocks,
                     const std::vector<int>& singleton_vars) {
  std::vector<std::vector<Rational>> rows(
      num_types, std::vector<Rational>(lp.num_vars));
  for (const SignalBlock& block : blocks) {
    for (const TypeVar& tv : block.vars) rows[tv.type][tv.var] = 1;
  }
  for (int j = 0; j < static_cast<int>(singleton_vars.size()); ++j) {
    rows[j][singleton_vars[j]] = 1;
  }
  for (auto& row : rows) lp.AddConstraint(std::move(row), Relation::kLessEqual, 1);
}

// Constraints are built against the final variable count, so all variables
// are created first.
void PadConstraintRows(LpProblem& lp) {
  for (auto& row : lp.constraints) row.coeffs.resize(lp.num_vars);
}

std::vector<int> TypesOf(const WinnerTables& tables, int a, int b) {
  std::vector<int> types;
  const auto& da = tables.won[a];
  const auto& db = tables.won[b];
  types.reserve(da.size() + db.size());
  std::merge(da.begin(), da.end(), db.begin(), db.end(),
             std::back_inserter(types));
  return types;
}

std::pair<LpProblem, ReducedLpIndex> BuildPairLp(const PsiMatrix& psi,
                                                 bool equal_bid) {
  RequireTwoBidders(psi);
  const int n = psi.num_bidders();
  const int m = psi.num_types();
  const WinnerTables tables = ComputeWinnerTables(psi);

  LpProblem lp;
  ReducedLpIndex index;
  index.equal_bid = equal_bid;
  for (int j = 0; j < m; ++j) {
    index.singleton_vars.push_back(
        lp.AddVariable(psi(*tables.second[j], j), "x[" + std::to_string(j) + "]"));
  }
  for (int first = 0; first < n; ++first) {
    for (int second = equal_bid ? first + 1 : 0; second < n; ++second) {
      if (second == first) continue;
      if (equal_bid &&
          (tables.won[first].empty() || tables.won[second].empty())) {
        continue;
      }
      std::vector<int> types = TypesOf(tables, first, second);
      if (types.empty()) continue;
      SignalBlock block;
      block.first = first;
      block.second = second;
      for (int j : types) {
        block.subset |= 1u << j;
        std::string name = "y[" + std::to_string(j) + "|" +
                           std::to_string(first) + "," +
                           std::to_string(second) + "]";
        block.vars.push_back({j, lp.AddVariable(psi(second, j), name)});
      }
      index.pair_blocks.push_back(std::move(block));
    }
  }
  for (const SignalBlock& block : index.pair_blocks) {
    if (equal_bid) {
      AddBidOrder(lp, psi, block, block.first, block.second, Relation::kEqual);
    } else {
      AddBidOrder(lp, psi, block, block.first, block.second);
    }
    for (int other = 0; other < n; ++other) {
      if (other == block.first || other == block.second) continue;
      AddBidOrder(lp, psi, block, block.first, other);
      AddBidOrder(lp, psi, block, block.second, other);
    }
  }
  AddTypeMassRows(lp, m, index.pair_blocks, index.singleton_vars);
  PadConstraintRows(lp);
  return {std::move(lp), std::move(index)};
}

std::map<int, Rational> BlockAlloc(const SignalBlock& block,
                                   const std::vector<Rational>& values) {
  std::map<int, Rational> alloc;
  for (const TypeVar& tv : block.vars) {
    if (sgn(values[tv.var]) > 0) alloc[tv.type] += values[tv.var];
  }
  return alloc;
}

void RequireOptimal(const LpSolution& solution) {
  if (solution.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNotOptimal,
                "cannot extract a scheme from an " +
                    std::string(LpStatusName(solution.status)) + " LP");
  }
}

}  // namespace

std::string_view LpMethodName(LpMethod method) {
  switch (method) {
    case LpMethod::kNaive: return "naive";
    case LpMethod::kReduced: return "reduced";
    case LpMethod::kEqualBid: return "equalbid";
  }
  return "unknown";
}

LpMethod ParseLpMethod(std::string_view name) {
  if (name == "naive") return LpMethod::kNaive;
  if (name == "reduced") return LpMethod::kReduced;
  if (name == "equalbid") return LpMethod::kEqualBid;
  throw Error(ErrorCode::kParseError,
              "unknown method \"" + std::string(name) +
                  "\" (expected naive, reduced or equalbid)");
}

std::pair<LpProblem, NaiveLpIndex> BuildNaiveLp(const PsiMatrix& psi) {
  RequireTwoBidders(psi);
  const int n = psi.num_bidders();
  const int m = psi.num_types();
  if (m > kMaxNaiveTypes) {
    throw Error(ErrorCode::kTooLarge,
                "the naive LP enumerates all 2^m type sets; m = " +
                    std::to_string(m) + " exceeds the limit of " +
                    std::to_string(kMaxNaiveTypes));
  }
  LpProblem lp;
  NaiveLpIndex index;
  index.num_types = m;
  for (uint32_t subset = 1; subset < (1u << m); ++subset) {
    for (int first = 0; first < n; ++first) {
      for (int second = 0; second < n; ++second) {
        if (second == first) continue;
        SignalBlock block;
        block.first = first;
        block.second = second;
        block.subset = subset;
        for (int j = 0; j < m; ++j) {
          if (!(subset & (1u << j))) continue;
          std::string name = "x[" + std::to_string(j) + "|" +
                             SubsetLabel(subset, m) + "," +
                             std::to_string(first) + "," +
                             std::to_string(second) + "]";
          block.vars.push_back({j, lp.AddVariable(psi(second, j), name)});
        }
        index.blocks.push_back(std::move(block));
      }
    }
  }
  for (const SignalBlock& block : index.blocks) {
    for (int other = 0; other < n; ++other) {
      if (other == block.first || other == block.second) continue;
      AddBidOrder(lp, psi, block, block.first, other);
      AddBidOrder(lp, psi, block, block.second, other);
    }
    AddBidOrder(lp, psi, block, block.first, block.second);
  }
  AddTypeMassRows(lp, m, index.blocks, {});
  PadConstraintRows(lp);
  return {std::move(lp), std::move(index)};
}

std::pair<LpProblem, ReducedLpIndex> BuildReducedLp(const PsiMatrix& psi) {
  return BuildPairLp(psi, /*equal_bid=*/false);
}

std::pair<LpProblem, ReducedLpIndex> BuildEqualBidLp(const PsiMatrix& psi) {
  return BuildPairLp(psi, /*equal_bid=*/true);
}

SignalingScheme ExtractScheme(const LpSolution& solution,
                              const ReducedLpIndex& index,
                              const PsiMatrix& psi) {
  RequireOptimal(solution);
  const int m = psi.num_types();
  SignalingScheme scheme;
  std::vector<Rational> used(m);
  for (const SignalBlock& block : index.pair_blocks) {
    auto alloc = BlockAlloc(block, solution.values);
    if (alloc.empty()) continue;
    for (const auto& [type, phi] : alloc) used[type] += phi;
    scheme.signals.push_back(Signal::Create(std::move(alloc)));
  }
  for (int j = 0; j < m; ++j) {
    const Rational& x = solution.values[index.singleton_vars[j]];
    used[j] += x;
    Rational mass = x + (1 - used[j]);
    if (sgn(mass) > 0) scheme.signals.push_back(Signal::Singleton(j, mass));
  }
  return scheme;
}

SignalingScheme ExtractScheme(const LpSolution& solution,
                              const NaiveLpIndex& index,
                              const PsiMatrix& psi) {
  RequireOptimal(solution);
  const int m = psi.num_types();
  SignalingScheme scheme;
  std::vector<Rational> used(m);
  for (const SignalBlock& block : index.blocks) {
    auto alloc = BlockAlloc(block, solution.values);
    if (alloc.empty()) continue;
    for (const auto& [type, phi] : alloc) used[type] += phi;
    scheme.signals.push_back(Signal::Create(std::move(alloc)));
  }
  for (int j = 0; j < m; ++j) {
    Rational residual = 1 - used[j];
    if (sgn(residual) > 0) scheme.signals.push_back(Signal::Singleton(j, residual));
  }
  return scheme;
}

SignalingScheme AllSingletonScheme(int num_types) {
  SignalingScheme scheme;
  for (int j = 0; j < num_types; ++j) {
    scheme.signals.push_back(Signal::Singleton(j));
  }
  return scheme;
}

MixedSolution OptimalMixed(const PsiMatrix& psi, LpMethod method) {
  MixedSolution result;
  if (psi.num_bidders() < 2) {
    result.revenue = 0;
    result.scheme = AllSingletonScheme(psi.num_types());
    return result;
  }
  LpSolution solution;
  if (method == LpMethod::kNaive) {
    auto [lp, index] = BuildNaiveLp(psi);
    solution = SolveExact(lp);
    result.lp_variables = lp.num_vars;
    result.lp_constraints = static_cast<int>(lp.constraints.size());
    result.scheme = ExtractScheme(solution, index, psi);
  } else {
    auto [lp, index] = method == LpMethod::kReduced ? BuildReducedLp(psi)
                                                    : BuildEqualBidLp(psi);
    solution = SolveExact(lp);
    result.lp_variables = lp.num_vars;
    result.lp_constraints = static_cast<int>(lp.constraints.size());
    result.scheme = ExtractScheme(solution, index, psi);
  }
  result.revenue = solution.objective_value;
  result.pivots = solution.pivots;
  if (SchemeRevenue(psi, result.scheme) != result.revenue) {
    throw std::logic_error("extracted scheme revenue " +
                           ToFraction(SchemeRevenue(psi, result.scheme)) +
                           " differs from LP optimum " +
                           ToFraction(result.revenue));
  }
  return result;
}

}  // namespace mixsig
