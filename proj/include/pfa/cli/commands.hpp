// Copyright 2026 The PFA-TQFT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pfa/calibration.hpp"
#include "pfa/cli/ranges.hpp"
#include "pfa/cli/report.hpp"

namespace pfa::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitViolation = 3,
};

/// A rendered-ready result. `exit_code` is kExitViolation when a checked
/// bound or invariant failed; the table is still complete in that case.
struct CommandOutput {
  Table table;
  Metadata meta;
  int exit_code = kExitSuccess;
  std::string violation;
};

struct TvdOptions {
  std::string m = "4,5,6";
  std::string d = "all";
  std::size_t phases = 500;
  std::size_t grid = 4096;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
/// Rows {m, d, max_tv, argmax_phi, bound_tight, bound_loose, ratio, violation}.
/// A row violates when max_tv exceeds the tight bound.
CommandOutput run_tvd(const TvdOptions &opts);

struct GatesOptions {
  std::string m = "30";
  std::string d = "all";
};
CommandOutput run_gates(const GatesOptions &opts);

enum class CliffMode { kExact, kSampled, kBoth };

struct CliffOptions {
  std::string m = "5";
  std::string d = "all";
  CliffMode mode = CliffMode::kExact;
  std::string phases = "grid:256";
  std::uint64_t shots = 1000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
};
/// Mean success probability over the phase set per (m, d). The d = m row must
/// stay above 8/pi^2 for every phase; otherwise the run reports a violation.
CommandOutput run_cliff(const CliffOptions &opts);

struct PlatformsOptions {
  int m = 30;
  std::optional<std::filesystem::path> platform_file;
};
CommandOutput run_platforms(const PlatformsOptions &opts);

struct RmseOptions {
  std::string m = "16";
  std::string d = "full,11";
  std::string eps = "1e-4..1e-2:log9";
  double c = kDefaultNoiseConstant;
};
CommandOutput run_rmse(const RmseOptions &opts);

struct CrossoverOptions {
  std::string m = "16";
  std::string d = "11";
  double c = kDefaultNoiseConstant;
};
CommandOutput run_crossover(const CrossoverOptions &opts);

struct TfimOptions {
  int n = 4;
  double coupling = 1.0;
  double field = 0.5;
  /// Number of lowest eigenvalues listed; 0 lists the whole spectrum.
  std::size_t spectrum = 0;
  /// When set, runs the QPE energy experiment over these register sizes
  /// instead of listing the spectrum.
  std::optional<std::string> m;
  std::string d = "full";
  std::string eps = "0";
  double c = kDefaultNoiseConstant;
  std::string levels = "0";
  bool sampled = false;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 42;
};
CommandOutput run_tfim(const TfimOptions &opts);

struct PlanOptions {
  int m = 5;
  int d = 5;
};
/// The plan serialization text.
std::string run_plan(const PlanOptions &opts);

struct SuiteFile {
  std::string name;
  CommandOutput output;
};

/// The default experiment set, one output per table/figure family.
std::vector<SuiteFile> run_suite(std::uint64_t seed, unsigned threads = 0);

/// Writes each suite output as <dir>/<name>.<csv|json>; returns the worst exit code.
int write_suite(const std::vector<SuiteFile> &files, const std::filesystem::path &dir, Format format);

}  // namespace pfa::cli
