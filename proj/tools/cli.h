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

#ifndef MIXSIG_TOOLS_CLI_H_
#define MIXSIG_TOOLS_CLI_H_

#include <ostream>

namespace mixsig {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapability = 3;

// Runs the mixsig command line. Returns the process exit code: 0 on success,
// 2 for unreadable or invalid input, 3 for instances the requested command
// cannot handle (too large, or fewer than two bidders).
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace mixsig

#endif  // MIXSIG_TOOLS_CLI_H_
