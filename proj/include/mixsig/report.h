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

// Run reports shared by the command-line tool and the Python module.
//
// Every rational appears in JSON as {"exact": "p/q", "decimal": <double>}.
// The double is the nearest binary64 value, so it is within 1e-12 of the
// exact value for the magnitudes handled here; tables show "p/q (d.dddddd)".

#ifndef MIXSIG_REPORT_H_
#define MIXSIG_REPORT_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "mixsig/benchmarks.h"
#include "mixsig/model.h"
#include "mixsig/scheme_optimizer.h"

namespace mixsig {

inline constexpr int kReportSchemaVersion = 1;

struct LpStats {
  int variables = 0;
  int constraints = 0;
  int pivots = 0;
};

struct GapSummary {
  int k = 0;
  Rational ratio;  // mixed / pure
};

struct RunReport {
  std::string command;
  RationalMatrix psi;
  std::optional<LpMethod> method;
  std::optional<Rational> revenue;
  std::optional<SignalingScheme> scheme;
  std::optional<LpStats> lp;
  std::optional<BenchmarkReport> benchmarks;
  std::optional<Rational> upper_bound;
  std::optional<Rational> certificate;
  std::optional<PureSchemeResult> pure;
  std::optional<GapSummary> gap;
  double duration_seconds = 0;
};

// Each of these fills the fields of one command; duration is left at 0.
RunReport SolveReport(const PsiMatrix& psi, LpMethod method);
RunReport BenchmarkRunReport(const PsiMatrix& psi);
RunReport PureReport(const PsiMatrix& psi);
RunReport GapReport(int k);

nlohmann::json RationalReportJson(const Rational& value);
nlohmann::json SchemeToJson(const PsiMatrix& psi,
                            const SignalingScheme& scheme);
// Reads the "scheme" array of a report back. Throws Error(kParseError).
SignalingScheme SchemeFromJson(const nlohmann::json& scheme);

nlohmann::json ReportToJson(const RunReport& report);
std::string RenderTable(const RunReport& report);

// Re-reads psi and the scheme from a JSON report and checks that their
// revenue equals the reported "revenue" exactly. Reports without a scheme
// pass trivially.
bool AuditReportJson(const nlohmann::json& report);

}  // namespace mixsig

#endif  // MIXSIG_REPORT_H_
