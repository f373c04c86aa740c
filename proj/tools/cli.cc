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

#include "cli.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mixsig/benchmarks.h"
#include "mixsig/error.h"
#include "mixsig/instance_io.h"
#include "mixsig/report.h"
#include "mixsig/scheme_optimizer.h"

namespace mixsig {

namespace {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kBadPrior:
    case ErrorCode::kBadK:
    case ErrorCode::kInvalidInstance:
    case ErrorCode::kInvalidSignal:
      return kExitInputError;
    case ErrorCode::kTooLarge:
    case ErrorCode::kDegenerate:
      return kExitCapability;
    default:
      return kExitFailure;
  }
}

// Instance files and divisible files are both accepted wherever a psi-matrix
// is needed.
PsiMatrix LoadPsi(const std::string& path) {
  std::string text = ReadFile(path);
  nlohmann::json doc = ParseJsonExact(text);
  if (doc.is_object() && doc.contains("psi")) return ParseDivisible(text);
  return BuildPsi(ParseInstance(text));
}

void WriteOutput(const std::string& text, const std::string& path,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParseError, "cannot write " + path);
  file << text;
}

void Emit(RunReport report, double seconds, bool json, std::ostream& out) {
  report.duration_seconds = seconds;
  if (json) {
    out << ReportToJson(report).dump(2) << "\n";
  } else {
    out << RenderTable(report);
  }
}

template <typename F>
double Timed(F&& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct Options {
  std::string file;
  std::string method = "equalbid";
  bool json = false;
  int k = 0;
  std::string out_path;
  std::string direction;
  std::string prior_path;
  uint64_t first_seed = 0;
  int count = 200;
  int n = 3;
  int m = 3;
  int max_value = 9;
  std::string csv_path;
};

void RunBatch(const Options& opt, std::ostream& out) {
  std::ostringstream csv;
  csv << "seed,n,m,mixed,pure,B,Btilde,bound\n";
  int rows = 0;
  for (int k = 0; k < opt.count; ++k) {
    uint64_t seed = opt.first_seed + static_cast<uint64_t>(k);
    PsiMatrix psi = BuildPsi(RandomInstance(seed, opt.n, opt.m, opt.max_value));
    Rational mixed = OptimalMixed(psi).revenue;
    Rational pure = OptimalPureRevenue(psi).revenue;
    BenchmarkReport b = ComputeBenchmarks(psi);
    csv << seed << "," << opt.n << "," << opt.m << "," << ToFraction(mixed)
        << "," << ToFraction(pure) << "," << ToFraction(b.b) << ","
        << ToFraction(b.b_tilde) << "," << ToFraction(RevenueUpperBound(psi))
        << "\n";
    ++rows;
  }
  if (opt.csv_path.empty()) {
    out << csv.str();
  } else {
    WriteOutput(csv.str(), opt.csv_path, out);
    out << "wrote " << rows << " rows to " << opt.csv_path << "\n";
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Revenue-optimal signaling for probabilistic second-price "
               "auctions",
               "mixsig"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> methods = {"naive", "reduced", "equalbid"};

  auto* solve = app.add_subcommand("solve", "Optimal mixed signaling scheme");
  solve->add_option("file", opt.file, "Instance file")->required();
  solve->add_option("--method", opt.method, "LP formulation")
      ->check(CLI::IsMember(methods));
  solve->add_flag("--json", opt.json, "Print a JSON report");

  auto* bench = app.add_subcommand(
      "benchmark", "Benchmarks B and Btilde, upper bound, half-B certificate");
  bench->add_option("file", opt.file, "Instance file")->required();
  bench->add_flag("--json", opt.json, "Print a JSON report");

  auto* pure = app.add_subcommand("pure", "Optimal pure scheme by enumeration");
  pure->add_option("file", opt.file, "Instance file")->required();
  pure->add_flag("--json", opt.json, "Print a JSON report");

  auto* gap = app.add_subcommand(
      "gap", "Instance where mixed signaling earns twice the pure optimum");
  gap->add_option("k", opt.k, "Even k >= 2")->required();
  gap->add_option("--out", opt.out_path, "Write the instance file here");
  gap->add_flag("--json", opt.json, "Print a JSON report");

  auto* convert = app.add_subcommand(
      "convert", "Convert between instance files and divisible-goods files");
  convert->add_option("file", opt.file, "Input file")->required();
  convert->add_option("--direction", opt.direction, "Conversion direction")
      ->required()
      ->check(CLI::IsMember({"to-divisible", "from-divisible"}));
  convert->add_option("--prior", opt.prior_path,
                      "Prior for from-divisible (default uniform)");
  convert->add_option("--out", opt.out_path, "Output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", opt.file, "Instance file")->required();

  auto* batch = app.add_subcommand(
      "batch", "Random instances: mixed, pure and benchmark values");
  batch->add_option("--first-seed", opt.first_seed, "First seed");
  batch->add_option("--count", opt.count, "Number of seeds")
      ->check(CLI::PositiveNumber);
  batch->add_option("--n", opt.n, "Bidders")->check(CLI::Range(2, 16));
  batch->add_option("--m", opt.m, "Types")->check(CLI::Range(1, kMaxPureTypes));
  batch->add_option("--max-value", opt.max_value, "Largest valuation")
      ->check(CLI::PositiveNumber);
  batch->add_option("--csv", opt.csv_path, "Write CSV here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) {
      PsiMatrix psi = LoadPsi(opt.file);
      std::optional<RunReport> report;
      double t = Timed([&] { report = SolveReport(psi, ParseLpMethod(opt.method)); });
      Emit(std::move(*report), t, opt.json, out);
    } else if (bench->parsed()) {
      PsiMatrix psi = LoadPsi(opt.file);
      std::optional<RunReport> report;
      double t = Timed([&] { report = BenchmarkRunReport(psi); });
      Emit(std::move(*report), t, opt.json, out);
    } else if (pure->parsed()) {
      PsiMatrix psi = LoadPsi(opt.file);
      std::optional<RunReport> report;
      double t = Timed([&] { report = PureReport(psi); });
      Emit(std::move(*report), t, opt.json, out);
    } else if (gap->parsed()) {
      std::optional<RunReport> report;
      double t = Timed([&] { report = GapReport(opt.k); });
      if (!opt.out_path.empty()) {
        WriteOutput(WriteInstance(GapInstance(opt.k)), opt.out_path, out);
      }
      Emit(std::move(*report), t, opt.json, out);
    } else if (convert->parsed()) {
      std::string text = ReadFile(opt.file);
      std::string result;
      if (opt.direction == "to-divisible") {
        result = WriteDivisible(ToDivisible(ParseInstance(text)));
      } else {
        std::optional<std::vector<Rational>> prior;
        if (!opt.prior_path.empty()) prior = ParsePrior(ReadFile(opt.prior_path));
        result = WriteInstance(FromDivisible(ParseDivisible(text), prior));
      }
      WriteOutput(result, opt.out_path, out);
    } else if (validate->parsed()) {
      PsiMatrix psi = LoadPsi(opt.file);
      out << "valid: n = " << psi.num_bidders() << ", m = " << psi.num_types()
          << "\n";
    } else if (batch->parsed()) {
      RunBatch(opt, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return kExitOk;
}

}  // namespace mixsig
