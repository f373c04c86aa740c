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

// Probabilistic single-item second-price auctions with mixed signals.
//
// An auction has n bidders and m item types. Bidder i values type j at
// v[i][j]; nature draws type j with probability p[j]. The auctioneer sees the
// type and broadcasts a signal drawn from a per-type distribution; bidders then
// bid their posterior expected value in a second-price auction.
//
// Everything here works on the adjusted valuations psi[i][j] = p[j] * v[i][j].
// The same matrix describes an auction of m divisible goods where bidder i
// values one unit of good j at psi[i][j]; a signaling scheme is then a set of
// bundles holding phi(j, S) units of good j each.

#ifndef MIXSIG_MODEL_H_
#define MIXSIG_MODEL_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mixsig/rational.h"

namespace mixsig {

using RationalMatrix = std::vector<std::vector<Rational>>;

class AuctionInstance {
 public:
  // Validates shape, nonnegative valuations and a strictly positive prior
  // summing to exactly 1. Throws Error(kInvalidInstance) or Error(kBadPrior).
  static AuctionInstance Create(RationalMatrix valuations,
                                std::vector<Rational> prior);
  // Same, with the uniform prior over the m types.
  static AuctionInstance WithUniformPrior(RationalMatrix valuations);

  int num_bidders() const { return static_cast<int>(valuations_.size()); }
  int num_types() const { return static_cast<int>(prior_.size()); }
  const Rational& valuation(int bidder, int type) const {
    return valuations_[bidder][type];
  }
  const RationalMatrix& valuations() const { return valuations_; }
  const std::vector<Rational>& prior() const { return prior_; }

  friend bool operator==(const AuctionInstance&,
                         const AuctionInstance&) = default;

 private:
  AuctionInstance(RationalMatrix valuations, std::vector<Rational> prior)
      : valuations_(std::move(valuations)), prior_(std::move(prior)) {}

  RationalMatrix valuations_;
  std::vector<Rational> prior_;
};

// Adjusted valuations; rows are bidders, columns are types (or goods).
class PsiMatrix {
 public:
  // Throws Error(kInvalidInstance) on an empty, ragged or negative matrix.
  static PsiMatrix Create(RationalMatrix entries);

  int num_bidders() const { return static_cast<int>(entries_.size()); }
  int num_types() const {
    return entries_.empty() ? 0 : static_cast<int>(entries_[0].size());
  }
  const Rational& operator()(int bidder, int type) const {
    return entries_[bidder][type];
  }
  const RationalMatrix& entries() const { return entries_; }

  // Every entry multiplied by `factor` (> 0).
  PsiMatrix Scaled(const Rational& factor) const;

  friend bool operator==(const PsiMatrix&, const PsiMatrix&) = default;

 private:
  explicit PsiMatrix(RationalMatrix entries) : entries_(std::move(entries)) {}

  RationalMatrix entries_;
};

// Per-type winners when each type is revealed on its own. Ties go to the
// lowest bidder index.
struct WinnerTables {
  std::vector<int> first;                  // w1(j)
  std::vector<std::optional<int>> second;  // w2(j); nullopt iff n == 1
  std::vector<std::vector<int>> won;       // d(i), ascending type indices
};

// A signal: the mass phi(j, S) in (0, 1] it receives from each type j in its
// support. Zero-mass entries are never stored.
class Signal {
 public:
  // Drops zero entries. Throws Error(kInvalidSignal) on negative masses,
  // masses above 1, out-of-range types or an empty support.
  static Signal Create(std::map<int, Rational> alloc);
  static Signal Singleton(int type, const Rational& mass = 1);

  const std::map<int, Rational>& alloc() const { return alloc_; }
  std::vector<int> support() const;
  int support_size() const { return static_cast<int>(alloc_.size()); }
  bool is_singleton() const { return alloc_.size() == 1; }
  // phi(type, S), zero outside the support.
  Rational mass(int type) const;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  explicit Signal(std::map<int, Rational> alloc) : alloc_(std::move(alloc)) {}

  std::map<int, Rational> alloc_;
};

struct SignalingScheme {
  std::vector<Signal> signals;

  // Sum over signals of phi(j, S) for each of the `num_types` types.
  std::vector<Rational> TypeMass(int num_types) const;
  bool IsFeasible(int num_types) const;
  // Per-type mass exactly 1 for every type.
  bool IsCanonical(int num_types) const;

  friend bool operator==(const SignalingScheme&,
                         const SignalingScheme&) = default;
};

// Highest and second-highest entries of a bid vector, lowest index on ties.
struct TopTwo {
  int first = 0;
  std::optional<int> second;
};
TopTwo RankTopTwo(const std::vector<Rational>& bids);

PsiMatrix BuildPsi(const AuctionInstance& instance);
WinnerTables ComputeWinnerTables(const PsiMatrix& psi);

// Unnormalized bids Pr[S] * E[v_i | S] = sum_j psi[i][j] * phi(j, S). They
// order bidders exactly like the posterior expectations do.
std::vector<Rational> SignalBids(const PsiMatrix& psi, const Signal& signal);

// Second-price revenue of one signal: the second-largest bid, 0 when n == 1.
Rational SignalRevenue(const PsiMatrix& psi, const Signal& signal);

// Throws Error(kInfeasibleScheme) if some type's mass exceeds 1.
Rational SchemeRevenue(const PsiMatrix& psi, const SignalingScheme& scheme);

struct RevenueSplit {
  Rational singleton;
  Rational non_singleton;
};
RevenueSplit SplitRevenue(const PsiMatrix& psi, const SignalingScheme& scheme);

struct PosteriorValues {
  Rational signal_probability;
  std::vector<Rational> values;  // E[v_i | S]
};
// Throws Error(kZeroProbabilitySignal) when Pr[S] == 0.
PosteriorValues ComputePosteriorValues(const AuctionInstance& instance,
                                       const Signal& signal);

// Divisible-goods view of an auction.
PsiMatrix ToDivisible(const AuctionInstance& instance);
// Auction with the given prior (uniform if absent) whose psi-matrix is `psi`.
// Throws Error(kBadPrior) on a nonpositive or non-normalized prior.
AuctionInstance FromDivisible(const PsiMatrix& psi,
                              const std::optional<std::vector<Rational>>& prior =
                                  std::nullopt);

std::vector<Rational> UniformPrior(int num_types);

}  // namespace mixsig

#endif  // MIXSIG_MODEL_H_
