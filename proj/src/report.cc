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

#include "mixsig/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mixsig/error.h"
#include "mixsig/instance_io.h"
#include "mixsig/transforms.h"

namespace mixsig {

namespace {

using nlohmann::json;

std::string Join(const std::vector<int>& items) {
  std::string out = "{";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(items[k]);
  }
  return out + "}";
}

std::string Pad(std::string text, std::size_t width) {
  text.resize(std::max(width, text.size() + 1), ' ');
  return text;
}

Rational ExactField(const json& value, const std::string& path) {
  if (value.is_object() && value.contains("exact")) {
    return RationalFromJson(value["exact"], path);
  }
  return RationalFromJson(value, path);
}

}  // namespace

RunReport SolveReport(const PsiMatrix& psi, LpMethod method) {
  RunReport report;
  report.command = "solve";
  report.psi = psi.entries();
  report.method = method;
  MixedSolution solution = OptimalMixed(psi, method);
  report.revenue = solution.revenue;
  report.scheme = std::move(solution.scheme);
  report.lp = LpStats{solution.lp_variables, solution.lp_constraints,
                      solution.pivots};
  return report;
}

RunReport BenchmarkRunReport(const PsiMatrix& psi) {
  RunReport report;
  report.command = "benchmark";
  report.psi = psi.entries();
  report.benchmarks = ComputeBenchmarks(psi);
  report.upper_bound = RevenueUpperBound(psi);
  CertificateResult certificate = RevenueLowerBoundCertificate(psi);
  report.certificate = certificate.revenue;
  report.revenue = certificate.revenue;
  report.scheme = std::move(certificate.scheme);
  return report;
}

RunReport PureReport(const PsiMatrix& psi) {
  RunReport report;
  report.command = "pure";
  report.psi = psi.entries();
  PureSchemeResult pure = OptimalPureRevenue(psi);
  report.revenue = pure.revenue;
  report.scheme = PartitionScheme(pure.partition);
  report.pure = std::move(pure);
  return report;
}

RunReport GapReport(int k) {
  PsiMatrix psi = BuildPsi(GapInstance(k));
  RunReport report = SolveReport(psi, LpMethod::kEqualBid);
  report.command = "gap";
  report.pure = OptimalPureRevenue(psi);
  report.gap = GapSummary{k, *report.revenue / report.pure->revenue};
  return report;
}

json RationalReportJson(const Rational& value) {
  return {{"exact", ToFraction(value)}, {"decimal", value.get_d()}};
}

json SchemeToJson(const PsiMatrix& psi, const SignalingScheme& scheme) {
  json out = json::array();
  for (const Signal& s : scheme.signals) {
    std::vector<Rational> bids = SignalBids(psi, s);
    TopTwo top = RankTopTwo(bids);
    json masses = json::array();
    for (const auto& [type, phi] : s.alloc()) {
      masses.push_back({{"type", type}, {"mass", RationalReportJson(phi)}});
    }
    json entry = {{"support", s.support()},
                  {"masses", std::move(masses)},
                  {"first", top.first},
                  {"bid", RationalReportJson(bids[top.first])},
                  {"revenue", RationalReportJson(SignalRevenue(psi, s))}};
    entry["second"] = top.second ? json(*top.second) : json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

SignalingScheme SchemeFromJson(const json& scheme) {
  if (!scheme.is_array()) {
    throw Error(ErrorCode::kParseError, "scheme: expected an array");
  }
  SignalingScheme out;
  for (std::size_t k = 0; k < scheme.size(); ++k) {
    std::string path = "scheme[" + std::to_string(k) + "]";
    const json& masses = scheme[k].value("masses", json());
    if (!masses.is_array()) {
      throw Error(ErrorCode::kParseError, path + ".masses: expected an array");
    }
    std::map<int, Rational> alloc;
    for (const json& entry : masses) {
      if (!entry.contains("type") || !entry["type"].is_number_integer() ||
          !entry.contains("mass")) {
        throw Error(ErrorCode::kParseError,
                    path + ".masses: entries need \"type\" and \"mass\"");
      }
      alloc[entry["type"].get<int>()] =
          ExactField(entry["mass"], path + ".masses");
    }
    out.signals.push_back(Signal::Create(std::move(alloc)));
  }
  return out;
}

json ReportToJson(const RunReport& report) {
  PsiMatrix psi = PsiMatrix::Create(report.psi);
  json out = {{"schemaVersion", kReportSchemaVersion},
              {"command", report.command},
              {"n", psi.num_bidders()},
              {"m", psi.num_types()}};
  json rows = json::array();
  for (const auto& row : report.psi) {
    json r = json::array();
    for (const Rational& x : row) r.push_back(ToFraction(x));
    rows.push_back(std::move(r));
  }
  out["psi"] = std::move(rows);
  if (report.method) out["method"] = std::string(LpMethodName(*report.method));
  if (report.revenue) out["revenue"] = RationalReportJson(*report.revenue);
  if (report.scheme) out["scheme"] = SchemeToJson(psi, *report.scheme);
  if (report.lp) {
    out["lp"] = {{"variables", report.lp->variables},
                 {"constraints", report.lp->constraints},
                 {"pivots", report.lp->pivots}};
  }
  if (report.benchmarks) {
    const BenchmarkReport& b = *report.benchmarks;
    out["benchmarks"] = {{"B", RationalReportJson(b.b)},
                         {"i0", b.i0},
                         {"Btilde", RationalReportJson(b.b_tilde)},
                         {"iStar", b.i_star},
                         {"sandwich", b.b_tilde <= 2 * b.b && b.b <= b.b_tilde}};
  }
  if (report.upper_bound) {
    out["upperBound"] = RationalReportJson(*report.upper_bound);
  }
  if (report.certificate) {
    out["certificate"] = RationalReportJson(*report.certificate);
  }
  if (report.pure) {
    out["pure"] = {{"revenue", RationalReportJson(report.pure->revenue)},
                   {"partition", report.pure->partition}};
  }
  if (report.gap) {
    out["gap"] = {{"k", report.gap->k},
                  {"mixed", RationalReportJson(*report.revenue)},
                  {"ratio", RationalReportJson(report.gap->ratio)}};
  }
  out["durationSeconds"] = report.duration_seconds;
  return out;
}

std::string RenderTable(const RunReport& report) {
  PsiMatrix psi = PsiMatrix::Create(report.psi);
  std::ostringstream out;
  out << "instance: n = " << psi.num_bidders() << ", m = " << psi.num_types()
      << "\n";
  if (report.method) out << "method: " << LpMethodName(*report.method) << "\n";
  if (report.command == "pure" && report.pure) {
    out << "optimal pure revenue: " << ToDisplay(report.pure->revenue) << "\n";
    out << "partition:";
    for (const auto& part : report.pure->partition) out << " " << Join(part);
    out << "\n";
  } else if (report.command == "benchmark" && report.benchmarks) {
    const BenchmarkReport& b = *report.benchmarks;
    out << "B: " << ToDisplay(b.b) << "  (omit bidder " << b.i0 << ")\n";
    out << "Btilde: " << ToDisplay(b.b_tilde) << "  (omit bidder " << b.i_star
        << ")\n";
    out << "upper bound: " << ToDisplay(*report.upper_bound) << "\n";
    out << "certificate revenue: " << ToDisplay(*report.certificate) << "\n";
  } else if (report.revenue) {
    out << "optimal mixed revenue: " << ToDisplay(*report.revenue) << "\n";
  }
  if (report.gap) {
    out << "optimal pure revenue: " << ToDisplay(report.pure->revenue) << "\n";
    out << "ratio: " << ToFraction(report.gap->ratio) << "\n";
  }
  if (report.lp) {
    out << "lp: " << report.lp->variables << " variables, "
        << report.lp->constraints << " constraints, " << report.lp->pivots
        << " pivots\n";
  }
  if (report.scheme && report.command != "pure") {
    out << "signals:\n";
    out << "  support      top two   bid                      revenue\n";
    for (const Signal& s : report.scheme->signals) {
      std::vector<Rational> bids = SignalBids(psi, s);
      TopTwo top = RankTopTwo(bids);
      std::string winners = std::to_string(top.first) + "," +
                            (top.second ? std::to_string(*top.second) : "-");
      out << "  " << Pad(Join(s.support()), 13) << Pad(winners, 10)
          << Pad(ToDisplay(bids[top.first]), 25)
          << ToDisplay(SignalRevenue(psi, s)) << "\n";
      std::string masses = "    masses:";
      for (const auto& [type, phi] : s.alloc()) {
        masses += " " + std::to_string(type) + "=" + ToFraction(phi);
      }
      out << masses << "\n";
    }
  }
  char duration[32];
  std::snprintf(duration, sizeof(duration), "%.3f", report.duration_seconds);
  out << "time: " << duration << " s\n";
  return out.str();
}

bool AuditReportJson(const json& report) {
  if (!report.contains("scheme") || !report.contains("revenue")) return true;
  RationalMatrix rows;
  const json& psi_rows = report.at("psi");
  for (std::size_t i = 0; i < psi_rows.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < psi_rows[i].size(); ++j) {
      row.push_back(RationalFromJson(psi_rows[i][j], "psi"));
    }
    rows.push_back(std::move(row));
  }
  PsiMatrix psi = PsiMatrix::Create(std::move(rows));
  SignalingScheme scheme = SchemeFromJson(report["scheme"]);
  return SchemeRevenue(psi, scheme) == ExactField(report["revenue"], "revenue");
}

}  // namespace mixsig
