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

#include "mixsig/transforms.h"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "mixsig/error.h"
#include "mixsig/scheme_optimizer.h"

namespace mixsig {

namespace {

void RequireFeasible(const PsiMatrix& psi, const SignalingScheme& scheme) {
  if (!scheme.IsFeasible(psi.num_types())) {
    throw Error(ErrorCode::kInfeasibleScheme,
                "some type sends more than total mass 1");
  }
}

TransformReport MakeReport(const PsiMatrix& psi, const SignalingScheme& before,
                           SignalingScheme after, int steps) {
  TransformReport report;
  report.revenue_before = SchemeRevenue(psi, before);
  report.revenue_after = SchemeRevenue(psi, after);
  report.before = before;
  report.after = std::move(after);
  report.steps_applied = steps;
  return report;
}

// Adds `extra[j]` to the first singleton signal of type j, creating one when
// the scheme has none.
void AddSingletonMass(SignalingScheme& scheme,
                      const std::map<int, Rational>& extra) {
  for (const auto& [type, mass] : extra) {
    if (sgn(mass) == 0) continue;
    bool placed = false;
    for (Signal& s : scheme.signals) {
      if (s.is_singleton() && s.alloc().begin()->first == type) {
        s = Signal::Singleton(type, s.mass(type) + mass);
        placed = true;
        break;
      }
    }
    if (!placed) scheme.signals.push_back(Signal::Singleton(type, mass));
  }
}

}  // namespace

TransformReport MergeSignals(const PsiMatrix& psi,
                             const SignalingScheme& scheme) {
  RequireFeasible(psi, scheme);
  // Merging keeps the support and both leading bidders, so grouping on that
  // key in one pass reaches the same fixed point as repeated pairwise merges.
  using Key = std::tuple<std::vector<int>, int, int>;
  std::map<Key, size_t> slot;
  std::vector<std::map<int, Rational>> merged;
  int steps = 0;
  for (const Signal& s : scheme.signals) {
    TopTwo top = RankTopTwo(SignalBids(psi, s));
    Key key{s.support(), top.first, top.second.value_or(-1)};
    auto [it, inserted] = slot.emplace(key, merged.size());
    if (inserted) {
      merged.push_back(s.alloc());
      continue;
    }
    for (const auto& [type, phi] : s.alloc()) merged[it->second][type] += phi;
    ++steps;
  }
  SignalingScheme after;
  for (auto& alloc : merged) after.signals.push_back(Signal::Create(std::move(alloc)));
  return MakeReport(psi, scheme, std::move(after), steps);
}

bool IsSingletonSplittable(const PsiMatrix& psi, const Signal& signal) {
  const WinnerTables tables = ComputeWinnerTables(psi);
  Rational revealed = 0;
  for (const auto& [type, phi] : signal.alloc()) {
    if (tables.second[type]) revealed += phi * psi(*tables.second[type], type);
  }
  return revealed >= SignalRevenue(psi, signal);
}

std::vector<Signal> SplitThreeWinnerSignal(const PsiMatrix& psi,
                                           const Signal& signal) {
  const WinnerTables tables = ComputeWinnerTables(psi);
  std::set<int> winners;
  for (int type : signal.support()) winners.insert(tables.first[type]);
  if (winners.size() < 3) {
    throw Error(ErrorCode::kNotApplicable,
                "signal has " + std::to_string(winners.size()) +
                    " distinct type winners, the split needs at least 3");
  }
  TopTwo top = RankTopTwo(SignalBids(psi, signal));
  std::map<int, Rational> kept;
  std::vector<Signal> parts;
  std::vector<Signal> revealed;
  for (const auto& [type, phi] : signal.alloc()) {
    int w = tables.first[type];
    if (w == top.first || w == *top.second) {
      kept.emplace(type, phi);
    } else {
      revealed.push_back(Signal::Singleton(type, phi));
    }
  }
  if (!kept.empty()) parts.push_back(Signal::Create(std::move(kept)));
  parts.insert(parts.end(), revealed.begin(), revealed.end());
  return parts;
}

TransformReport EqualizeBids(const PsiMatrix& psi,
                             const SignalingScheme& scheme) {
  RequireFeasible(psi, scheme);
  const WinnerTables tables = ComputeWinnerTables(psi);
  SignalingScheme after;
  std::map<int, Rational> freed;
  int steps = 0;
  for (const Signal& s : scheme.signals) {
    if (s.is_singleton() || psi.num_bidders() < 2) {
      after.signals.push_back(s);
      continue;
    }
    std::vector<Rational> bids = SignalBids(psi, s);
    TopTwo top = RankTopTwo(bids);
    const int high = top.first;
    const int low = *top.second;
    if (bids[high] == bids[low]) {
      after.signals.push_back(s);
      continue;
    }
    Rational numerator = 0;    // sum over S2 of phi (psi_low - psi_high)
    Rational denominator = 0;  // sum over S1 of phi (psi_high - psi_low)
    for (const auto& [type, phi] : s.alloc()) {
      int w = tables.first[type];
      if (w == high) {
        denominator += phi * (psi(high, type) - psi(low, type));
      } else if (w == low) {
        numerator += phi * (psi(low, type) - psi(high, type));
      } else {
        throw Error(ErrorCode::kUnsupportedSignal,
                    "type " + std::to_string(type) + " is won by bidder " +
                        std::to_string(w) + ", outside the signal's top two (" +
                        std::to_string(high) + ", " + std::to_string(low) + ")");
      }
    }
    if (sgn(denominator) == 0) {
      throw Error(ErrorCode::kUnsupportedSignal,
                  "top bidder gains nothing on its own types, cannot equalize");
    }
    Rational g = numerator / denominator;
    if (sgn(g) < 0 || g >= 1) {
      throw std::logic_error("equalization factor " + ToFraction(g) +
                             " outside [0, 1)");
    }
    std::map<int, Rational> alloc;
    for (const auto& [type, phi] : s.alloc()) {
      if (tables.first[type] == high) {
        alloc[type] = phi * g;
        freed[type] += phi - alloc[type];
      } else {
        alloc[type] = phi;
      }
    }
    bool any = false;
    for (const auto& [type, phi] : alloc) any = any || sgn(phi) > 0;
    if (any) after.signals.push_back(Signal::Create(std::move(alloc)));
    ++steps;
  }
  AddSingletonMass(after, freed);
  return MakeReport(psi, scheme, std::move(after), steps);
}

TransformReport AbsorbSingletons(const PsiMatrix& psi,
                                 const SignalingScheme& scheme) {
  RequireFeasible(psi, scheme);
  const int m = psi.num_types();
  const WinnerTables tables = ComputeWinnerTables(psi);
  auto top_value = [&](int type) -> const Rational& {
    return psi(tables.first[type], type);
  };

  std::vector<Rational> singleton(m);
  SignalingScheme after;
  for (const Signal& s : scheme.signals) {
    if (s.is_singleton()) {
      const auto& [type, phi] = *s.alloc().begin();
      singleton[type] += phi;
    } else {
      after.signals.push_back(s);
    }
  }
  // Types with an all-zero column earn nothing in any signal and would give a
  // zero-mass partner, so they never take part.
  auto active = [&](int type) {
    return sgn(singleton[type]) > 0 && sgn(top_value(type)) > 0;
  };
  auto distinct_winners = [&] {
    std::set<int> winners;
    for (int j = 0; j < m; ++j) {
      if (active(j)) winners.insert(tables.first[j]);
    }
    return winners.size();
  };
  if (distinct_winners() < 2) return MakeReport(psi, scheme, scheme, 0);

  int steps = 0;
  while (distinct_winners() >= 2) {
    int pick = -1;
    Rational pick_value;
    for (int j = 0; j < m; ++j) {
      if (!active(j)) continue;
      Rational value = singleton[j] * top_value(j);
      if (pick < 0 || value < pick_value) {
        pick = j;
        pick_value = value;
      }
    }
    int partner = -1;
    Rational partner_value;
    for (int j = 0; j < m; ++j) {
      if (!active(j) || tables.first[j] == tables.first[pick]) continue;
      Rational value = singleton[j] * top_value(j);
      if (partner < 0 || value > partner_value) {
        partner = j;
        partner_value = value;
      }
    }
    Rational lambda = pick_value / partner_value;
    if (sgn(lambda) <= 0 || lambda > 1) {
      throw std::logic_error("absorption ratio " + ToFraction(lambda) +
                             " outside (0, 1]");
    }
    after.signals.push_back(Signal::Create(
        {{pick, singleton[pick]}, {partner, lambda * singleton[partner]}}));
    singleton[pick] = 0;
    singleton[partner] *= 1 - lambda;
    if (++steps > m) {
      throw std::logic_error("singleton absorption did not stop within m steps");
    }
  }
  for (int j = 0; j < m; ++j) {
    if (sgn(singleton[j]) > 0) {
      after.signals.push_back(Signal::Singleton(j, singleton[j]));
    }
  }
  return MakeReport(psi, scheme, std::move(after), steps);
}

CertificateResult RevenueLowerBoundCertificate(const PsiMatrix& psi) {
  if (psi.num_bidders() < 2) {
    throw Error(ErrorCode::kDegenerate,
                "the benchmark needs at least two bidders");
  }
  TransformReport report =
      AbsorbSingletons(psi, AllSingletonScheme(psi.num_types()));
  return {report.revenue_after, std::move(report.after)};
}

}  // namespace mixsig
