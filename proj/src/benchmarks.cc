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

#include <string>

#include "mixsig/error.h"

namespace mixsig {

namespace {

void RequireTwoBidders(const PsiMatrix& psi) {
  if (psi.num_bidders() < 2) {
    throw Error(ErrorCode::kDegenerate,
                "benchmarks need at least two bidders");
  }
}

Rational SumOfMaxExcluding(const PsiMatrix& psi, int excluded) {
  Rational total = 0;
  for (int j = 0; j < psi.num_types(); ++j) {
    Rational best = 0;
    for (int i = 0; i < psi.num_bidders(); ++i) {
      if (i != excluded && psi(i, j) > best) best = psi(i, j);
    }
    total += best;
  }
  return total;
}

Rational SecondHighest(const std::vector<Rational>& bids) {
  TopTwo top = RankTopTwo(bids);
  return top.second ? bids[*top.second] : Rational(0);
}

void GrowthStrings(int m, int pos, int max_label, std::vector<int>& labels,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (pos == m) {
    visit(labels);
    return;
  }
  for (int label = 0; label <= max_label + 1; ++label) {
    labels[pos] = label;
    GrowthStrings(m, pos + 1, std::max(max_label, label), labels, visit);
  }
}

}  // namespace

BenchmarkReport ComputeBenchmarks(const PsiMatrix& psi) {
  RequireTwoBidders(psi);
  const int n = psi.num_bidders();
  BenchmarkReport report;
  for (int omit = 0; omit < n; ++omit) {
    Rational value = SumOfMaxExcluding(psi, omit);
    if (omit == 0 || value < report.b) {
      report.b = value;
      report.i0 = omit;
    }
  }
  const WinnerTables tables = ComputeWinnerTables(psi);
  Rational best_own;
  for (int i = 0; i < n; ++i) {
    Rational own = 0;
    for (int j : tables.won[i]) own += psi(i, j);
    if (i == 0 || own > best_own) {
      best_own = own;
      report.i_star = i;
    }
  }
  report.b_tilde = SumOfMaxExcluding(psi, report.i_star);
  return report;
}

Rational RevenueUpperBound(const PsiMatrix& psi) {
  return SumOfMaxExcluding(psi, -1);
}

Rational PartitionRevenue(const PsiMatrix& psi,
                          const std::vector<std::vector<int>>& partition) {
  Rational total = 0;
  std::vector<Rational> bids(psi.num_bidders());
  for (const auto& part : partition) {
    for (int i = 0; i < psi.num_bidders(); ++i) {
      bids[i] = 0;
      for (int j : part) bids[i] += psi(i, j);
    }
    total += SecondHighest(bids);
  }
  return total;
}

void ForEachRestrictedGrowthString(
    int m, const std::function<void(const std::vector<int>&)>& visit) {
  if (m <= 0) return;
  std::vector<int> labels(m, 0);
  GrowthStrings(m, 1, 0, labels, visit);
}

PureSchemeResult OptimalPureRevenue(const PsiMatrix& psi) {
  RequireTwoBidders(psi);
  const int n = psi.num_bidders();
  const int m = psi.num_types();
  if (m > kMaxPureTypes) {
    throw Error(ErrorCode::kTooLarge,
                "pure-scheme search enumerates Bell(m) partitions; m = " +
                    std::to_string(m) + " exceeds the limit of " +
                    std::to_string(kMaxPureTypes));
  }
  PureSchemeResult best;
  bool have_best = false;
  std::vector<int> best_labels;
  std::vector<std::vector<Rational>> part_bids(m, std::vector<Rational>(n));
  ForEachRestrictedGrowthString(m, [&](const std::vector<int>& labels) {
    int parts = 0;
    for (int label : labels) parts = std::max(parts, label + 1);
    for (int p = 0; p < parts; ++p) {
      for (int i = 0; i < n; ++i) part_bids[p][i] = 0;
    }
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) part_bids[labels[j]][i] += psi(i, j);
    }
    Rational revenue = 0;
    for (int p = 0; p < parts; ++p) revenue += SecondHighest(part_bids[p]);
    if (!have_best || revenue > best.revenue) {
      have_best = true;
      best.revenue = revenue;
      best_labels = labels;
    }
  });
  int parts = 0;
  for (int label : best_labels) parts = std::max(parts, label + 1);
  best.partition.assign(parts, {});
  for (int j = 0; j < m; ++j) best.partition[best_labels[j]].push_back(j);
  return best;
}

SignalingScheme PartitionScheme(const std::vector<std::vector<int>>& partition) {
  SignalingScheme scheme;
  for (const auto& part : partition) {
    std::map<int, Rational> alloc;
    for (int j : part) alloc[j] = 1;
    scheme.signals.push_back(Signal::Create(std::move(alloc)));
  }
  return scheme;
}

AuctionInstance GapInstance(int k) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::kBadK,
                "k must be an even integer >= 2, got " + std::to_string(k));
  }
  const int size = k + 1;
  RationalMatrix v(size, std::vector<Rational>(size));
  v[0][0] = size;
  for (int i = 1; i < size; ++i) v[i][i] = 1;
  return AuctionInstance::WithUniformPrior(std::move(v));
}

AuctionInstance IdentityInstance(int m) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidInstance, "identity instance needs m >= 1");
  }
  RationalMatrix v(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i) v[i][i] = 1;
  return AuctionInstance::WithUniformPrior(std::move(v));
}

PsiMatrix Figure2Psi() {
  return PsiMatrix::Create({{500, 500, 0}, {499, 498, 1}, {7, 3, 999}});
}

uint64_t SplitMix64::Next() {
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::Below(uint64_t bound) {
  // Values below 2^64 mod bound would be over-represented.
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

AuctionInstance RandomInstance(uint64_t seed, int n, int m, int max_value) {
  if (n < 1 || m < 1 || max_value < 1) {
    throw Error(ErrorCode::kInvalidInstance,
                "random instances need n, m, max_value >= 1");
  }
  SplitMix64 rng(seed);
  RationalMatrix v(n, std::vector<Rational>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      v[i][j] = static_cast<unsigned long>(
          rng.Below(static_cast<uint64_t>(max_value) + 1));
    }
  }
  return AuctionInstance::WithUniformPrior(std::move(v));
}

}  // namespace mixsig
