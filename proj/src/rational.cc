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

#include "mixsig/rational.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>

#include "mixsig/error.h"

namespace mixsig {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance: return "INVALID_INSTANCE";
    case ErrorCode::kBadPrior: return "BAD_PRIOR";
    case ErrorCode::kInvalidSignal: return "INVALID_SIGNAL";
    case ErrorCode::kInfeasibleScheme: return "INFEASIBLE_SCHEME";
    case ErrorCode::kZeroProbabilitySignal: return "ZERO_PROBABILITY_SIGNAL";
    case ErrorCode::kMalformedProblem: return "MALFORMED_PROBLEM";
    case ErrorCode::kNumericallyUnstable: return "NUMERICALLY_UNSTABLE";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kDegenerate: return "DEGENERATE";
    case ErrorCode::kNotOptimal: return "NOT_OPTIMAL";
    case ErrorCode::kNotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::kUnsupportedSignal: return "UNSUPPORTED_SIGNAL";
    case ErrorCode::kBadK: return "BAD_K";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

namespace {

[[noreturn]] void BadNumber(std::string_view text) {
  throw Error(ErrorCode::kParseError,
              "not a rational number: \"" + std::string(text) + "\"");
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) BadNumber(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadNumber(text);
    mpz_class d = ParseInteger(den);
    if (d == 0) BadNumber(text);
    result = Rational(ParseInteger(num), d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
        exp_negative = exp_text[0] == '-';
        exp_text.remove_prefix(1);
      }
      if (!AllDigits(exp_text) || exp_text.size() > 6) BadNumber(text);
      exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
      if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      int_part = mantissa.substr(0, dot);
      frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) BadNumber(text);
    if (!int_part.empty() && !AllDigits(int_part)) BadNumber(text);
    if (!frac_part.empty() && !AllDigits(frac_part)) BadNumber(text);

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator = ParseInteger(digits);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      result = Rational(numerator * PowerOfTen(exponent));
    } else {
      result = Rational(numerator, PowerOfTen(-exponent));
    }
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string ToFraction(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string ToDecimal(const Rational& value, int digits) {
  mpz_class scale = PowerOfTen(static_cast<unsigned long>(digits));
  mpz_class num = abs(value.get_num()) * scale;
  const mpz_class& den = value.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  mpz_class scaled = (2 * num + den) / (2 * den);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) {
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  bool is_zero = scaled == 0;
  return (value < 0 && !is_zero ? "-" : "") + body;
}

std::string ToDisplay(const Rational& value) {
  return ToFraction(value) + " (" + ToDecimal(value, 6) + ")";
}

std::string ToTerminatingDecimal(const Rational& value) {
  mpz_class den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return "";
  int digits = std::max(twos, fives);
  if (digits == 0) return value.get_num().get_str();
  return ToDecimal(value, digits);
}

}  // namespace mixsig
