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

#include "pfa/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "parallel.hpp"
#include "pfa/error.hpp"
#include "pfa/qft.hpp"
#include "pfa/qpe.hpp"
#include "pfa/tfim.hpp"

namespace pfa::cli {

namespace {

// Compared against the tight bound; only absorbs floating-point noise.
constexpr double kBoundSlack = 1e-12;
constexpr double kQpeFloor = 8.0 / (std::numbers::pi * std::numbers::pi);

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string join(const std::vector<int> &values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? "," : "") + std::to_string(values[i]);
  }
  return s;
}

std::string join(const std::vector<double> &values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? "," : "") + shortest(values[i]);
  }
  return s;
}

/// Sorted, de-duplicated register sizes within [lo, hi].
std::vector<int> register_sizes(const std::string &spec, int lo, int hi, const char *command) {
  std::vector<int> ms = parse_int_list(spec);
  std::set<int> unique(ms.begin(), ms.end());
  for (int m : unique) {
    if (m < lo || m > hi) {
      throw ParameterError(std::string(command) + ": m=" + std::to_string(m) + " outside [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
    }
  }
  return {unique.begin(), unique.end()};
}

std::vector<int> sorted_depths(const std::string &spec, int m) {
  std::vector<int> ds = expand_depths(spec, m);
  std::set<int> unique(ds.begin(), ds.end());
  return {unique.begin(), unique.end()};
}

Cell integer(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell integer(int v) { return static_cast<std::int64_t>(v); }

}  // namespace

CommandOutput run_tvd(const TvdOptions &opts) {
  CommandOutput out;
  const std::vector<int> ms = register_sizes(opts.m, 1, 12, "tvd");
  if (opts.phases == 0 && opts.grid == 0) {
    throw ParameterError("tvd: phase sampling is empty (phases=0, grid=0)");
  }
  out.meta.command = "tvd";
  out.meta.set("m", join(ms));
  out.meta.set("d", opts.d);
  out.meta.set("phases", std::to_string(opts.phases));
  out.meta.set("grid", std::to_string(opts.grid));
  out.meta.set("seed", std::to_string(opts.seed));
  out.table.columns = {"m", "d", "max_tv", "argmax_phi", "bound_tight", "bound_loose", "ratio", "violation"};

  PhaseSampling sampling{opts.phases, opts.seed, opts.grid};
  for (int m : ms) {
    const std::vector<int> depths = sorted_depths(opts.d, m);
    for (const MaxTvd &r : max_tvd_sweep(m, depths, sampling, opts.threads)) {
      const double tight = tvd_bound(m, r.depth, BoundForm::kTight);
      const double loose = tvd_bound(m, r.depth, BoundForm::kLoose);
      const bool violated = r.value > tight + kBoundSlack;
      Cell ratio = loose > 0.0 ? Cell(r.value / loose) : Cell(std::monostate{});
      out.table.rows.push_back({integer(m), integer(r.depth), r.value, r.argmax_phase, tight, loose, ratio, violated});
      if (violated) {
        out.exit_code = kExitViolation;
        out.violation += "max_tv " + format_double(r.value) + " exceeds bound " + format_double(tight) + " at m=" +
                         std::to_string(m) + " d=" + std::to_string(r.depth) + "; ";
      }
    }
  }
  return out;
}

CommandOutput run_gates(const GatesOptions &opts) {
  CommandOutput out;
  const std::vector<int> ms = register_sizes(opts.m, 1, kMaxPlanQubits, "gates");
  out.meta.command = "gates";
  out.meta.set("m", join(ms));
  out.meta.set("d", opts.d);
  out.table.columns = {"m", "d", "gates", "gates_full", "reduction_pct"};
  for (int m : ms) {
    const std::uint64_t full = gate_count(m, m);
    for (int d : sorted_depths(opts.d, m)) {
      const std::uint64_t g = gate_count(m, d);
      Cell reduction = full > 0 ? Cell(100.0 * (1.0 - static_cast<double>(g) / static_cast<double>(full)))
                                : Cell(std::monostate{});
      out.table.rows.push_back({integer(m), integer(d), integer(g), integer(full), reduction});
    }
  }
  return out;
}

CommandOutput run_cliff(const CliffOptions &opts) {
  CommandOutput out;
  const std::vector<int> ms = register_sizes(opts.m, 2, kMaxDistributionQubits, "cliff");
  const PhaseSpec spec = parse_phase_spec(opts.phases);
  const std::vector<double> phases = spec.resolve(opts.seed);
  if (opts.mode != CliffMode::kExact && opts.shots == 0) {
    throw ParameterError("cliff: shots must be positive");
  }
  const bool exact = opts.mode != CliffMode::kSampled;
  const bool sampled = opts.mode != CliffMode::kExact;

  out.meta.command = "cliff";
  out.meta.set("m", join(ms));
  out.meta.set("d", opts.d);
  out.meta.set("mode", opts.mode == CliffMode::kExact ? "exact" : opts.mode == CliffMode::kSampled ? "sampled" : "both");
  out.meta.set("phases", spec.to_string());
  out.meta.set("shots", std::to_string(opts.shots));
  out.meta.set("seed", std::to_string(opts.seed));
  out.table.columns = {"m",           "d", "success_exact", "success_exact_min", "success_sampled",
                       "cliff_depth_marker"};

  for (int m : ms) {
    const int marker = cliff_depth(m);
    for (int d : sorted_depths(opts.d, m)) {
      const CircuitPlan plan = plan_pfa_tqft(m, d);
      std::vector<double> exact_values(phases.size(), 0.0);
      std::vector<double> sampled_values(phases.size(), 0.0);
      detail::parallel_for(phases.size(), opts.threads, [&](std::size_t i) {
        const PhaseDistribution dist = phase_distribution(phases[i], plan);
        if (exact) {
          exact_values[i] = success_probability_exact(dist, phases[i]);
        }
        if (sampled) {
          SeededRng rng = SeededRng::for_task(opts.seed, i);
          std::uint64_t hits = 0;
          for (auto y : sample_outcomes(dist, opts.shots, rng)) {
            hits += within_success_window(y, m, phases[i]);
          }
          sampled_values[i] = static_cast<double>(hits) / static_cast<double>(opts.shots);
        }
      });
      auto mean = [](const std::vector<double> &v) {
        double s = 0.0;
        for (double x : v) {
          s += x;
        }
        return s / static_cast<double>(v.size());
      };
      Cell exact_mean = std::monostate{};
      Cell exact_min = std::monostate{};
      if (exact) {
        const double lowest = *std::min_element(exact_values.begin(), exact_values.end());
        exact_mean = mean(exact_values);
        exact_min = lowest;
        if (d == m && lowest < kQpeFloor) {
          out.exit_code = kExitViolation;
          out.violation += "full-QFT success " + format_double(lowest) + " below 8/pi^2 at m=" + std::to_string(m) +
                           "; ";
        }
      }
      Cell sampled_mean = sampled ? Cell(mean(sampled_values)) : Cell(std::monostate{});
      out.table.rows.push_back({integer(m), integer(d), exact_mean, exact_min, sampled_mean, integer(marker)});
    }
  }
  return out;
}

CommandOutput run_platforms(const PlatformsOptions &opts) {
  CommandOutput out;
  const PlatformRegistry registry =
      opts.platform_file ? PlatformRegistry::load(opts.platform_file->string()) : PlatformRegistry::builtin();
  out.meta.command = "platforms";
  out.meta.set("m", std::to_string(opts.m));
  out.meta.set("platform_file", opts.platform_file ? opts.platform_file->string() : "builtin");
  out.table.columns = {"platform",   "eps_2q",        "d_star",      "depth",         "full_qft",
                       "gates",      "gates_full",    "reduction_pct", "theta_d_star", "tv_bound_loose"};
  for (const PlatformRow &r : platform_report(opts.m, registry)) {
    out.table.rows.push_back({r.name, r.eps_2q, integer(r.d_star), integer(r.depth), r.full_qft, integer(r.gates),
                              integer(r.gates_full), 100.0 * r.reduction, rotation_angle(r.d_star),
                              r.tv_bound_loose});
  }
  return out;
}

CommandOutput run_rmse(const RmseOptions &opts) {
  CommandOutput out;
  const std::vector<int> ms = register_sizes(opts.m, 1, kMaxPlanQubits, "rmse");
  const std::vector<double> eps = parse_real_list(opts.eps);
  out.meta.command = "rmse";
  out.meta.set("m", join(ms));
  out.meta.set("d", opts.d);
  out.meta.set("eps", join(eps));
  out.meta.set("c", shortest(opts.c));
  out.table.columns = {"m",  "d", "eps_2q", "c", "gates", "tv", "precision_term", "truncation_term", "noise_term",
                       "rmse"};
  for (int m : ms) {
    for (int d : sorted_depths(opts.d, m)) {
      for (double e : eps) {
        const ErrorBudget b = rmse_model(m, d, e, opts.c);
        out.table.rows.push_back({integer(m), integer(d), e, opts.c, integer(b.gates), b.tv, b.precision_term,
                                  b.truncation_term, b.noise_term, b.rmse});
      }
    }
  }
  return out;
}

CommandOutput run_crossover(const CrossoverOptions &opts) {
  CommandOutput out;
  const std::vector<int> ms = register_sizes(opts.m, 2, kMaxPlanQubits, "crossover");
  out.meta.command = "crossover";
  out.meta.set("m", join(ms));
  out.meta.set("d", opts.d);
  out.meta.set("c", shortest(opts.c));
  out.table.columns = {"m", "d", "c", "tv", "g_full", "g", "eps_cross"};
  for (int m : ms) {
    for (int d : sorted_depths(opts.d, m)) {
      const Crossover x = crossover(m, d, opts.c);
      out.table.rows.push_back(
          {integer(m), integer(d), opts.c, x.tv, integer(x.gates_full), integer(x.gates), x.eps_cross});
    }
  }
  return out;
}

CommandOutput run_tfim(const TfimOptions &opts) {
  CommandOutput out;
  const TfimSpec spec{opts.n, opts.coupling, opts.field};
  spec.validate();
  out.meta.set("n", std::to_string(opts.n));
  out.meta.set("J", shortest(opts.coupling));
  out.meta.set("h", shortest(opts.field));

  if (!opts.m) {
    out.meta.command = "tfim";
    out.meta.set("spectrum", std::to_string(opts.spectrum));
    const std::vector<double> values = tfim_spectrum(spec);
    const std::size_t count = opts.spectrum == 0 ? values.size() : std::min(opts.spectrum, values.size());
    out.table.columns = {"index", "energy"};
    for (std::size_t i = 0; i < count; ++i) {
      out.table.rows.push_back({integer(static_cast<std::uint64_t>(i)), values[i]});
    }
    return out;
  }

  const std::vector<int> ms = register_sizes(*opts.m, 1, kMaxDistributionQubits, "tfim");
  const std::vector<double> eps = parse_real_list(opts.eps);
  const std::vector<int> levels = parse_int_list(opts.levels);
  if (opts.sampled && opts.shots == 0) {
    throw ParameterError("tfim: shots must be positive");
  }
  out.meta.command = "tfim-qpe";
  out.meta.set("m", join(ms));
  out.meta.set("d", opts.d);
  out.meta.set("eps", join(eps));
  out.meta.set("c", shortest(opts.c));
  out.meta.set("levels", join(levels));
  out.meta.set("mode", opts.sampled ? "sampled" : "exact");
  out.meta.set("shots", std::to_string(opts.shots));
  out.meta.set("seed", std::to_string(opts.seed));
  out.table.columns = {"m",
                       "d",
                       "eps_2q",
                       "level",
                       "true_energy",
                       "phi",
                       "e_scale",
                       "degenerate_on_grid",
                       "wrapped",
                       "estimated_phase",
                       "estimated_energy",
                       "phase_rmse",
                       "energy_rmse",
                       "model_gates",
                       "model_tv",
                       "model_phase_rmse",
                       "model_energy_rmse"};

  std::uint64_t task = 0;
  for (int m : ms) {
    for (int d : sorted_depths(opts.d, m)) {
      for (int level : levels) {
        if (level < 0) {
          throw ParameterError("tfim: negative eigenvalue level");
        }
        for (double e : eps) {
          EnergyExperimentConfig cfg;
          cfg.num_qubits = m;
          cfg.depth = d;
          cfg.eps_2q = e;
          cfg.noise_constant = opts.c;
          cfg.level = static_cast<std::size_t>(level);
          if (opts.sampled) {
            cfg.mode = SampledMode{opts.shots, opts.seed + task};
          }
          ++task;
          const EnergyExperimentResult r = qpe_energy_experiment(spec, cfg);
          out.table.rows.push_back({integer(m), integer(d), e, integer(level), r.true_energy, r.encoded.phi,
                                    r.encoded.e_scale, r.degenerate_on_grid, r.encoded.wrapped, r.estimated_phase,
                                    r.estimated_energy, r.phase_rmse, r.energy_rmse, integer(r.model.gates),
                                    r.model.tv, r.model.rmse, r.model_energy_rmse});
        }
      }
    }
  }
  return out;
}

std::string run_plan(const PlanOptions &opts) { return plan_pfa_tqft(opts.m, opts.d).serialize(); }

std::vector<SuiteFile> run_suite(std::uint64_t seed, unsigned threads) {
  std::vector<SuiteFile> files;

  TvdOptions tvd;
  tvd.m = "4..10";
  tvd.seed = seed;
  tvd.threads = threads;
  files.push_back({"tvd", run_tvd(tvd)});

  GatesOptions gates;
  gates.m = "5,10,20,30,50";
  files.push_back({"gates", run_gates(gates)});

  CliffOptions cliff;
  cliff.m = "5,8,12";
  cliff.mode = CliffMode::kBoth;
  cliff.seed = seed;
  cliff.threads = threads;
  files.push_back({"cliff", run_cliff(cliff)});

  files.push_back({"platforms", run_platforms({})});

  RmseOptions rmse;
  rmse.d = "8,10,11,full";
  files.push_back({"rmse", run_rmse(rmse)});

  CrossoverOptions cross;
  cross.d = "8..15";
  files.push_back({"crossover", run_crossover(cross)});

  files.push_back({"tfim_spectrum", run_tfim({})});

  TfimOptions qpe;
  qpe.m = "8,12,16,20";
  qpe.d = "full";
  qpe.eps = "1e-4,1e-3,5e-3,1e-2";
  qpe.levels = "0,1";
  qpe.seed = seed;
  files.push_back({"tfim_qpe_full", run_tfim(qpe)});
  qpe.m = "12,16,20";
  qpe.d = "10";
  files.push_back({"tfim_qpe_d10", run_tfim(qpe)});

  return files;
}

int write_suite(const std::vector<SuiteFile> &files, const std::filesystem::path &dir, Format format) {
  std::filesystem::create_directories(dir);
  int worst = kExitSuccess;
  for (const auto &f : files) {
    const auto path = dir / (f.name + (format == Format::kCsv ? ".csv" : ".json"));
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      throw ParameterError("cannot write '" + path.string() + "'");
    }
    os << render(f.output.table, f.output.meta, format);
    worst = std::max(worst, f.output.exit_code);
  }
  return worst;
}

}  // namespace pfa::cli
