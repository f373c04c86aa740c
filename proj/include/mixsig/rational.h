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

#ifndef MIXSIG_RATIONAL_H_
#define MIXSIG_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mixsig {

// Exact rational numbers (GMP). Values are kept canonical (lowest terms).
using Rational = mpq_class;

// num/den in lowest terms; den must be nonzero.
inline Rational MakeRational(long num, long den) {
  Rational q(num);
  q /= den;
  return q;
}

// Parses "3", "-2", "0.125", "1.5e-3", or "7/12" exactly. Throws
// Error(kParseError) on anything else, including a zero denominator.
Rational ParseRational(std::string_view text);

// Always "p/q", also for integers ("2/1").
std::string ToFraction(const Rational& value);

// Fixed-point rendering with `digits` decimals, rounded half away from zero.
std::string ToDecimal(const Rational& value, int digits = 6);

// "p/q (d.dddddd)", the human-facing rendering used in reports.
std::string ToDisplay(const Rational& value);

// Exact decimal string if the value has a terminating expansion, otherwise
// an empty string.
std::string ToTerminatingDecimal(const Rational& value);

inline Rational Sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

}  // namespace mixsig

#endif  // MIXSIG_RATIONAL_H_
