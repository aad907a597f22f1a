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

// Command-line harness: every experiment is a subcommand that prints or
// writes a CSV/JSON table. See README.md for the flag reference.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfa/cli/commands.hpp"
#include "pfa/error.hpp"

namespace {

using namespace pfa::cli;

constexpr const char *kOutDirEnv = "PFA_TQFT_OUT_DIR";

struct GlobalOptions {
  std::string format = "csv";
  std::string out;
  bool verbose = false;
  unsigned threads = 0;
};

void print_error(int code, const std::string &kind, const std::string &message) {
  nlohmann::ordered_json record;
  record["error"]["exit_code"] = code;
  record["error"]["kind"] = kind;
  record["error"]["message"] = message;
  std::cerr << record.dump() << "\n";
}

Format parse_format(const std::string &s) { return s == "json" ? Format::kJson : Format::kCsv; }

/// --out wins; otherwise $PFA_TQFT_OUT_DIR/<name>.<ext>; otherwise stdout.
std::optional<std::filesystem::path> output_path(const GlobalOptions &g, const std::string &name,
                                                 const std::string &ext) {
  if (!g.out.empty()) {
    return std::filesystem::path(g.out);
  }
  if (const char *dir = std::getenv(kOutDirEnv); dir && *dir) {
    return std::filesystem::path(dir) / (name + ext);
  }
  return std::nullopt;
}

void write_text(const std::optional<std::filesystem::path> &path, const std::string &text) {
  if (!path) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  if (path->has_parent_path()) {
    std::filesystem::create_directories(path->parent_path());
  }
  std::ofstream os(*path, std::ios::binary);
  if (!os) {
    throw pfa::ParameterError("cannot write '" + path->string() + "'");
  }
  os << text;
}

void write_sidecar(const std::optional<std::filesystem::path> &path, const Metadata &meta, int exit_code,
                   double seconds) {
  nlohmann::ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = tool_version();
  doc["command"] = meta.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto &[k, v] : meta.config) {
    config[k] = v;
  }
  doc["config"] = config;
  doc["exit_code"] = exit_code;
  doc["runtime_seconds"] = seconds;
  if (path) {
    std::ofstream os(path->string() + ".meta.json", std::ios::binary);
    os << doc.dump(2) << "\n";
  } else {
    std::cerr << "# " << doc.dump() << "\n";
  }
}

int emit(const GlobalOptions &g, const CommandOutput &result, double seconds) {
  const Format format = parse_format(g.format);
  const auto path = output_path(g, result.meta.command, format == Format::kCsv ? ".csv" : ".json");
  write_text(path, render(result.table, result.meta, format));
  write_sidecar(path, result.meta, result.exit_code, seconds);
  if (result.exit_code == kExitViolation) {
    print_error(kExitViolation, "invariant_violation", result.violation);
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Truncated-QFT phase estimation simulator and calibration toolkit", "pfa-tqft"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--out", g.out, "Output file (default: stdout, or $PFA_TQFT_OUT_DIR/<command>.<ext>)");
  app.add_flag("-v,--verbose", g.verbose, "Log warnings to stderr");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");

  TvdOptions tvd;
  auto *tvd_cmd = app.add_subcommand("tvd", "Max total variation distance vs. the analytic bound");
  tvd_cmd->add_option("--m", tvd.m, "Register sizes, e.g. 4,5,6 or 4..10")->capture_default_str();
  tvd_cmd->add_option("--d", tvd.d, "Depths: list, range, 'all' or 'full'")->capture_default_str();
  tvd_cmd->add_option("--phases", tvd.phases, "Random phases")->capture_default_str();
  tvd_cmd->add_option("--grid", tvd.grid, "Uniform midpoint grid size")->capture_default_str();
  tvd_cmd->add_option("--seed", tvd.seed, "PRNG seed")->capture_default_str();

  GatesOptions gates;
  auto *gates_cmd = app.add_subcommand("gates", "Controlled-phase gate counts");
  gates_cmd->add_option("--m", gates.m)->capture_default_str();
  gates_cmd->add_option("--d", gates.d)->capture_default_str();

  CliffOptions cliff;
  std::string cliff_mode = "exact";
  auto *cliff_cmd = app.add_subcommand("cliff", "Success probability vs. truncation depth");
  cliff_cmd->add_option("--m", cliff.m)->capture_default_str();
  cliff_cmd->add_option("--d", cliff.d)->capture_default_str();
  cliff_cmd->add_option("--mode", cliff_mode)->check(CLI::IsMember({"exact", "sampled", "both"}))->capture_default_str();
  cliff_cmd->add_option("--phases", cliff.phases, "grid:P | random:N | list:a,b,... | N")->capture_default_str();
  cliff_cmd->add_option("--shots", cliff.shots)->capture_default_str();
  cliff_cmd->add_option("--seed", cliff.seed)->capture_default_str();

  PlatformsOptions platforms;
  std::string platform_file;
  auto *platforms_cmd = app.add_subcommand("platforms", "Per-platform d*, gate counts and reductions");
  platforms_cmd->add_option("--m", platforms.m)->capture_default_str();
  platforms_cmd->add_option("--platform-file", platform_file, "Registry file with '<name>,<eps_2q>' lines")
      ->check(CLI::ExistingFile);

  RmseOptions rmse;
  auto *rmse_cmd = app.add_subcommand("rmse", "Three-term RMSE model");
  rmse_cmd->add_option("--m", rmse.m)->capture_default_str();
  rmse_cmd->add_option("--d", rmse.d)->capture_default_str();
  rmse_cmd->add_option("--eps", rmse.eps, "Error rates, e.g. 1e-4..1e-2:log8")->capture_default_str();
  rmse_cmd->add_option("--c", rmse.c, "Noise constant")->capture_default_str();

  CrossoverOptions cross;
  auto *cross_cmd = app.add_subcommand("crossover", "Noise rate where truncation starts to win");
  cross_cmd->add_option("--m", cross.m)->capture_default_str();
  cross_cmd->add_option("--d", cross.d)->capture_default_str();
  cross_cmd->add_option("--c", cross.c)->capture_default_str();

  TfimOptions tfim;
  std::string tfim_m;
  std::string tfim_mode = "exact";
  auto *tfim_cmd = app.add_subcommand("tfim", "TFIM spectrum, or the QPE energy experiment when --m is given");
  // --h is the field, so this subcommand only answers to --help.
  tfim_cmd->set_help_flag("--help", "Print this help message and exit");
  tfim_cmd->add_option("--n", tfim.n, "Sites")->capture_default_str();
  tfim_cmd->add_option("--J,--coupling", tfim.coupling, "ZZ coupling")->capture_default_str();
  tfim_cmd->add_option("--h,--field", tfim.field, "Transverse field")->capture_default_str();
  tfim_cmd->add_option("--spectrum", tfim.spectrum, "Lowest K eigenvalues (0 = all)")->capture_default_str();
  tfim_cmd->add_option("--m", tfim_m, "Register sizes for the QPE experiment");
  tfim_cmd->add_option("--d", tfim.d)->capture_default_str();
  tfim_cmd->add_option("--eps", tfim.eps)->capture_default_str();
  tfim_cmd->add_option("--c", tfim.c)->capture_default_str();
  tfim_cmd->add_option("--levels", tfim.levels, "Eigenvalue indices (0 = ground)")->capture_default_str();
  tfim_cmd->add_option("--mode", tfim_mode)->check(CLI::IsMember({"exact", "sampled"}))->capture_default_str();
  tfim_cmd->add_option("--shots", tfim.shots)->capture_default_str();
  tfim_cmd->add_option("--seed", tfim.seed)->capture_default_str();

  PlanOptions plan;
  auto *plan_cmd = app.add_subcommand("plan", "Print the gate list of PFA-TQFT_d");
  plan_cmd->add_option("--m", plan.m)->required();
  plan_cmd->add_option("--d", plan.d)->required();

  std::uint64_t suite_seed = 42;
  std::string suite_dir;
  auto *suite_cmd = app.add_subcommand("suite", "Run the default experiment set into a directory");
  suite_cmd->add_option("--seed", suite_seed)->capture_default_str();
  suite_cmd->add_option("--out-dir", suite_dir, "Output directory (default: $PFA_TQFT_OUT_DIR or ./pfa_tqft_out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    print_error(kExitUsage, "usage", e.what());
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  try {
    if (*tvd_cmd) {
      tvd.threads = g.threads;
      auto result = run_tvd(tvd);
      return emit(g, result, elapsed());
    }
    if (*gates_cmd) {
      auto result = run_gates(gates);
      return emit(g, result, elapsed());
    }
    if (*cliff_cmd) {
      cliff.mode = cliff_mode == "exact" ? CliffMode::kExact : cliff_mode == "sampled" ? CliffMode::kSampled
                                                                                      : CliffMode::kBoth;
      cliff.threads = g.threads;
      if (g.verbose) {
        std::size_t wrapped = 0;
        parse_phase_spec(cliff.phases).resolve(cliff.seed, &wrapped);
        if (wrapped > 0) {
          std::cerr << "warning: " << wrapped << " phase(s) outside [0,1) were reduced modulo 1\n";
        }
      }
      auto result = run_cliff(cliff);
      return emit(g, result, elapsed());
    }
    if (*platforms_cmd) {
      if (!platform_file.empty()) {
        platforms.platform_file = platform_file;
      }
      auto result = run_platforms(platforms);
      return emit(g, result, elapsed());
    }
    if (*rmse_cmd) {
      auto result = run_rmse(rmse);
      return emit(g, result, elapsed());
    }
    if (*cross_cmd) {
      auto result = run_crossover(cross);
      return emit(g, result, elapsed());
    }
    if (*tfim_cmd) {
      if (!tfim_m.empty()) {
        tfim.m = tfim_m;
      }
      tfim.sampled = tfim_mode == "sampled";
      auto result = run_tfim(tfim);
      return emit(g, result, elapsed());
    }
    if (*plan_cmd) {
      write_text(output_path(g, "plan", ".txt"), run_plan(plan));
      return kExitSuccess;
    }
    if (*suite_cmd) {
      std::filesystem::path dir = suite_dir;
      if (dir.empty()) {
        const char *env = std::getenv(kOutDirEnv);
        dir = env && *env ? env : "pfa_tqft_out";
      }
      const Format format = parse_format(g.format);
      const auto files = run_suite(suite_seed, g.threads);
      const int code = write_suite(files, dir, format);
      Metadata meta;
      meta.command = "suite";
      meta.set("seed", std::to_string(suite_seed));
      meta.set("format", g.format);
      write_sidecar(dir / "suite", meta, code, elapsed());
      for (const auto &f : files) {
        if (f.output.exit_code == kExitViolation) {
          print_error(kExitViolation, "invariant_violation", f.name + ": " + f.output.violation);
        }
      }
      return code;
    }
  } catch (const pfa::ParameterError &e) {
    print_error(kExitUsage, "parameter", e.what());
    return kExitUsage;
  } catch (const pfa::NumericalError &e) {
    print_error(kExitNumerical, "numerical", e.what());
    return kExitNumerical;
  } catch (const std::exception &e) {
    print_error(kExitNumerical, "internal", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}
