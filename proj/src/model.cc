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

#include <string>

#include "mixsig/error.h"

namespace mixsig {

namespace {

void ValidateMatrix(const RationalMatrix& matrix, const char* what) {
  if (matrix.empty()) {
    throw Error(ErrorCode::kInvalidInstance,
                std::string(what) + " needs at least one bidder");
  }
  const size_t num_types = matrix[0].size();
  if (num_types == 0) {
    throw Error(ErrorCode::kInvalidInstance,
                std::string(what) + " needs at least one type");
  }
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != num_types) {
      throw Error(ErrorCode::kInvalidInstance,
                  std::string(what) + " row " + std::to_string(i) + " has " +
                      std::to_string(matrix[i].size()) + " entries, expected " +
                      std::to_string(num_types));
    }
    for (size_t j = 0; j < num_types; ++j) {
      if (sgn(matrix[i][j]) < 0) {
        throw Error(ErrorCode::kInvalidInstance,
                    std::string(what) + "[" + std::to_string(i) + "][" +
                        std::to_string(j) + "] is negative");
      }
    }
  }
}

void ValidatePrior(const std::vector<Rational>& prior, size_t num_types) {
  if (prior.size() != num_types) {
    throw Error(ErrorCode::kBadPrior,
                "prior has " + std::to_string(prior.size()) +
                    " entries, expected " + std::to_string(num_types));
  }
  Rational total = 0;
  for (size_t j = 0; j < prior.size(); ++j) {
    if (sgn(prior[j]) <= 0) {
      throw Error(ErrorCode::kBadPrior,
                  "prior[" + std::to_string(j) + "] = " + ToFraction(prior[j]) +
                      " must be strictly positive");
    }
    total += prior[j];
  }
  if (total != 1) {
    throw Error(ErrorCode::kBadPrior,
                "prior must sum to exactly 1, sums to " + ToDisplay(total));
  }
}

}  // namespace

AuctionInstance AuctionInstance::Create(RationalMatrix valuations,
                                        std::vector<Rational> prior) {
  ValidateMatrix(valuations, "valuations");
  ValidatePrior(prior, valuations[0].size());
  return AuctionInstance(std::move(valuations), std::move(prior));
}

AuctionInstance AuctionInstance::WithUniformPrior(RationalMatrix valuations) {
  ValidateMatrix(valuations, "valuations");
  auto prior = UniformPrior(static_cast<int>(valuations[0].size()));
  return AuctionInstance(std::move(valuations), std::move(prior));
}

PsiMatrix PsiMatrix::Create(RationalMatrix entries) {
  ValidateMatrix(entries, "psi");
  return PsiMatrix(std::move(entries));
}

PsiMatrix PsiMatrix::Scaled(const Rational& factor) const {
  RationalMatrix scaled = entries_;
  for (auto& row : scaled) {
    for (auto& x : row) x *= factor;
  }
  return PsiMatrix::Create(std::move(scaled));
}

Signal Signal::Create(std::map<int, Rational> alloc) {
  std::map<int, Rational> kept;
  for (auto& [type, mass] : alloc) {
    if (type < 0) {
      throw Error(ErrorCode::kInvalidSignal,
                  "negative type index " + std::to_string(type));
    }
    if (sgn(mass) < 0 || mass > 1) {
      throw Error(ErrorCode::kInvalidSignal,
                  "mass " + ToFraction(mass) + " for type " +
                      std::to_string(type) + " is outside [0, 1]");
    }
    if (sgn(mass) != 0) kept.emplace(type, std::move(mass));
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kInvalidSignal, "signal has empty support");
  }
  return Signal(std::move(kept));
}

Signal Signal::Singleton(int type, const Rational& mass) {
  return Create({{type, mass}});
}

std::vector<int> Signal::support() const {
  std::vector<int> types;
  types.reserve(alloc_.size());
  for (const auto& [type, mass] : alloc_) types.push_back(type);
  return types;
}

Rational Signal::mass(int type) const {
  auto it = alloc_.find(type);
  return it == alloc_.end() ? Rational(0) : it->second;
}

std::vector<Rational> SignalingScheme::TypeMass(int num_types) const {
  std::vector<Rational> mass(num_types);
  for (const Signal& s : signals) {
    for (const auto& [type, phi] : s.alloc()) {
      if (type >= num_types) {
        throw Error(ErrorCode::kInvalidSignal,
                    "signal uses type " + std::to_string(type) + " but only " +
                        std::to_string(num_types) + " types exist");
      }
      mass[type] += phi;
    }
  }
  return mass;
}

bool SignalingScheme::IsFeasible(int num_types) const {
  for (const Rational& total : TypeMass(num_types)) {
    if (total > 1) return false;
  }
  return true;
}

bool SignalingScheme::IsCanonical(int num_types) const {
  for (const Rational& total : TypeMass(num_types)) {
    if (total != 1) return false;
  }
  return true;
}

TopTwo RankTopTwo(const std::vector<Rational>& bids) {
  TopTwo top;
  for (int i = 1; i < static_cast<int>(bids.size()); ++i) {
    if (bids[i] > bids[top.first]) {
      top.second = top.first;
      top.first = i;
    } else if (!top.second || bids[i] > bids[*top.second]) {
      top.second = i;
    }
  }
  return top;
}

PsiMatrix BuildPsi(const AuctionInstance& instance) {
  RationalMatrix psi = instance.valuations();
  for (auto& row : psi) {
    for (size_t j = 0; j < row.size(); ++j) row[j] *= instance.prior()[j];
  }
  return PsiMatrix::Create(std::move(psi));
}

WinnerTables ComputeWinnerTables(const PsiMatrix& psi) {
  const int n = psi.num_bidders();
  const int m = psi.num_types();
  WinnerTables tables;
  tables.first.resize(m);
  tables.second.resize(m);
  tables.won.assign(n, {});
  std::vector<Rational> column(n);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) column[i] = psi(i, j);
    TopTwo top = RankTopTwo(column);
    tables.first[j] = top.first;
    tables.second[j] = top.second;
    tables.won[top.first].push_back(j);
  }
  return tables;
}

std::vector<Rational> SignalBids(const PsiMatrix& psi, const Signal& signal) {
  std::vector<Rational> bids(psi.num_bidders());
  for (const auto& [type, phi] : signal.alloc()) {
    if (type >= psi.num_types()) {
      throw Error(ErrorCode::kInvalidSignal,
                  "signal uses type " + std::to_string(type) +
                      " outside the psi-matrix");
    }
    for (int i = 0; i < psi.num_bidders(); ++i) bids[i] += psi(i, type) * phi;
  }
  return bids;
}

Rational SignalRevenue(const PsiMatrix& psi, const Signal& signal) {
  std::vector<Rational> bids = SignalBids(psi, signal);
  TopTwo top = RankTopTwo(bids);
  return top.second ? bids[*top.second] : Rational(0);
}

RevenueSplit SplitRevenue(const PsiMatrix& psi, const SignalingScheme& scheme) {
  if (!scheme.IsFeasible(psi.num_types())) {
    throw Error(ErrorCode::kInfeasibleScheme,
                "some type sends more than total mass 1");
  }
  RevenueSplit split;
  for (const Signal& s : scheme.signals) {
    if (s.is_singleton()) {
      split.singleton += SignalRevenue(psi, s);
    } else {
      split.non_singleton += SignalRevenue(psi, s);
    }
  }
  return split;
}

Rational SchemeRevenue(const PsiMatrix& psi, const SignalingScheme& scheme) {
  RevenueSplit split = SplitRevenue(psi, scheme);
  return split.singleton + split.non_singleton;
}

PosteriorValues ComputePosteriorValues(const AuctionInstance& instance,
                                       const Signal& signal) {
  PosteriorValues result;
  for (const auto& [type, phi] : signal.alloc()) {
    if (type >= instance.num_types()) {
      throw Error(ErrorCode::kInvalidSignal,
                  "signal uses type " + std::to_string(type) +
                      " outside the instance");
    }
    result.signal_probability += instance.prior()[type] * phi;
  }
  if (sgn(result.signal_probability) == 0) {
    throw Error(ErrorCode::kZeroProbabilitySignal,
                "signal is never sent");
  }
  result.values.assign(instance.num_bidders(), 0);
  for (int i = 0; i < instance.num_bidders(); ++i) {
    for (const auto& [type, phi] : signal.alloc()) {
      result.values[i] += instance.valuation(i, type) *
                          instance.prior()[type] * phi;
    }
    result.values[i] /= result.signal_probability;
  }
  return result;
}

PsiMatrix ToDivisible(const AuctionInstance& instance) {
  return BuildPsi(instance);
}

AuctionInstance FromDivisible(
    const PsiMatrix& psi, const std::optional<std::vector<Rational>>& prior) {
  std::vector<Rational> p = prior ? *prior : UniformPrior(psi.num_types());
  ValidatePrior(p, static_cast<size_t>(psi.num_types()));
  RationalMatrix valuations = psi.entries();
  for (auto& row : valuations) {
    for (size_t j = 0; j < row.size(); ++j) row[j] /= p[j];
  }
  return AuctionInstance::Create(std::move(valuations), std::move(p));
}

std::vector<Rational> UniformPrior(int num_types) {
  return std::vector<Rational>(num_types, MakeRational(1, num_types));
}

}  // namespace mixsig
