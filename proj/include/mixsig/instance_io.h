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

// JSON files for auction instances and psi-matrices.
//
// Instance file:
//   {"n": 3, "m": 3,
//    "valuations": [["1", "0", "0"], ...],
//    "prior": ["0.5", {"num": 1, "den": 4}, "1/4"]}
//
// "prior" is optional (uniform if absent) and so are "n" and "m", which must
// match the matrix when given. A number may be a JSON integer, a decimal
// string, a "p/q" string, a {"num", "den"} object, or a bare JSON decimal; all
// of them parse exactly, so 0.1 is 1/10.
//
// Divisible file:
//   {"kind": "divisible", "n": 3, "m": 3, "psi": [[...], ...]}

#ifndef MIXSIG_INSTANCE_IO_H_
#define MIXSIG_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mixsig/model.h"

namespace mixsig {

// Parses JSON text, keeping bare decimals as their source strings so they can
// be read exactly. Syntax errors throw Error(kParseError) naming line and
// column.
nlohmann::json ParseJsonExact(std::string_view text);

// `path` names the field in error messages, e.g. "prior[2]".
Rational RationalFromJson(const nlohmann::json& value, const std::string& path);
// A decimal string when the expansion terminates, else {"num", "den"}.
nlohmann::json RationalToJson(const Rational& value);

// Throws Error(kParseError) for structural problems and Error(kBadPrior) or
// Error(kInvalidInstance) for invalid content.
AuctionInstance ParseInstance(std::string_view text);
PsiMatrix ParseDivisible(std::string_view text);
// A JSON array, or an object with a "prior" array.
std::vector<Rational> ParsePrior(std::string_view text);

std::string WriteInstance(const AuctionInstance& instance);
std::string WriteDivisible(const PsiMatrix& psi);

// Reads a whole file; throws Error(kParseError) if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace mixsig

#endif  // MIXSIG_INSTANCE_IO_H_
