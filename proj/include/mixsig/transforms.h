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

// Revenue-aware rewrites of signaling schemes. Every transform returns a
// report whose revenues are recomputed from the schemes it holds.

#ifndef MIXSIG_TRANSFORMS_H_
#define MIXSIG_TRANSFORMS_H_

#include <vector>

#include "mixsig/model.h"

namespace mixsig {

struct TransformReport {
  SignalingScheme before;
  SignalingScheme after;
  Rational revenue_before;
  Rational revenue_after;
  int steps_applied = 0;
};

// Repeatedly merges two signals that have the same support and the same
// highest and second-highest bidder into one whose masses are the sums.
// Revenue is unchanged. Throws Error(kInfeasibleScheme).
TransformReport MergeSignals(const PsiMatrix& psi,
                             const SignalingScheme& scheme);

// True iff revealing each type of the signal separately earns at least as
// much: sum_j phi(j,S) * psi[w2(j)][j] >= rev(S).
bool IsSingletonSplittable(const PsiMatrix& psi, const Signal& signal);

// For a signal whose types are won (when revealed alone) by three or more
// distinct bidders: keeps the types won by its own top two bidders together
// and reveals every other type separately. The parts never earn less than the
// original. Throws Error(kNotApplicable) for fewer than three winners.
std::vector<Signal> SplitThreeWinnerSignal(const PsiMatrix& psi,
                                           const Signal& signal);

// Ties the top two bids of every non-singleton signal. For a signal with
// strictly higher top bid, the masses of the top bidder's own types are
// scaled by
//
//   g = sum_{S2} phi (psi2 - psi1) / sum_{S1} phi (psi1 - psi2)
//
// and the freed mass is revealed as singletons. Revenue never decreases.
// Each non-singleton signal must lie within the types won by its top two
// bidders, else Error(kUnsupportedSignal).
TransformReport EqualizeBids(const PsiMatrix& psi,
                             const SignalingScheme& scheme);

// Pairs up singleton signals of types with different winners until the
// remaining singletons all belong to one winner. Each step takes the
// singleton type j with the smallest phi(j,{j}) * max_i psi[i][j], partners it
// with the type j' of a different winner holding the most such value, and
// moves all of j and a fraction lambda <= 1 of j' into a new signal {j, j'}
// so that both winners contribute the same value from their own type.
// At most m steps. Types whose psi column is all zero are left alone.
TransformReport AbsorbSingletons(const PsiMatrix& psi,
                                 const SignalingScheme& scheme);

struct CertificateResult {
  Rational revenue;
  SignalingScheme scheme;
};

// Runs AbsorbSingletons from the fully revealing scheme. Its revenue is at
// least half of the leave-one-bidder-out benchmark. Throws Error(kDegenerate)
// when n < 2.
CertificateResult RevenueLowerBoundCertificate(const PsiMatrix& psi);

}  // namespace mixsig

#endif  // MIXSIG_TRANSFORMS_H_
