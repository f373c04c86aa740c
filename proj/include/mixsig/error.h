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

#ifndef MIXSIG_ERROR_H_
#define MIXSIG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixsig {

enum class ErrorCode {
  kInvalidInstance,
  kBadPrior,
  kInvalidSignal,
  kInfeasibleScheme,
  kZeroProbabilitySignal,
  kMalformedProblem,
  kNumericallyUnstable,
  kTooLarge,
  kDegenerate,
  kNotOptimal,
  kNotApplicable,
  kUnsupportedSignal,
  kBadK,
  kParseError,
};

// Upper-case tag for an error code, e.g. "TOO_LARGE".
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; callers
// branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace mixsig

#endif  // MIXSIG_ERROR_H_
