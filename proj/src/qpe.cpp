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

#include "pfa/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "pfa/error.hpp"
#include "pfa/phase.hpp"

namespace pfa {

namespace {

void check_distribution_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxDistributionQubits) {
    throw ParameterError("distribution experiments need 1 <= m <= " + std::to_string(kMaxDistributionQubits) +
                         ", got " + std::to_string(num_qubits));
  }
}

}  // namespace

PhaseDistribution::PhaseDistribution(int num_qubits, std::vector<double> probabilities)
    : num_qubits_(num_qubits), probabilities_(std::move(probabilities)) {
  check_distribution_qubits(num_qubits);
  if (probabilities_.size() != (std::size_t{1} << num_qubits)) {
    throw ParameterError("distribution length is not 2^m");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0 && p <= 1.0 + 1e-12)) {
      throw ParameterError("probability outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw ParameterError("probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

std::uint64_t PhaseDistribution::mode() const {
  return static_cast<std::uint64_t>(std::max_element(probabilities_.begin(), probabilities_.end()) -
                                    probabilities_.begin());
}

StateVector kickback_state(double phi, int num_qubits) {
  check_state_qubits(num_qubits);
  phi = wrap_phase(phi);
  const std::size_t n = std::size_t{1} << num_qubits;
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Amplitude> amps(n);
  for (std::size_t j = 0; j < n; ++j) {
    // j*phi mod 1 keeps the argument of polar small for large j.
    const double turns = wrap_phase(static_cast<double>(j) * phi);
    amps[j] = std::polar(amplitude, 2.0 * std::numbers::pi * turns);
  }
  return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

PhaseDistribution phase_distribution(double phi, const CircuitPlan &plan) {
  check_distribution_qubits(plan.num_qubits());
  StateVector out = apply_plan(kickback_state(phi, plan.num_qubits()), plan, Direction::kInverse);
  std::vector<double> probs(out.size());
  for (std::size_t y = 0; y < out.size(); ++y) {
    probs[y] = std::norm(out[y]);
  }
  return PhaseDistribution(plan.num_qubits(), std::move(probs));
}

PhaseDistribution phase_distribution(double phi, int num_qubits, int depth) {
  check_distribution_qubits(num_qubits);
  return phase_distribution(phi, plan_pfa_tqft(num_qubits, depth));
}

PhaseDistribution closed_form_full_distribution(double phi, int num_qubits) {
  check_distribution_qubits(num_qubits);
  phi = wrap_phase(phi);
  const std::size_t n = std::size_t{1} << num_qubits;
  const double nd = static_cast<double>(n);
  const double scaled = phi * nd;  // exact: power-of-two scaling
  std::vector<double> probs(n);
  for (std::size_t y = 0; y < n; ++y) {
    // t = N * (phi - y/N), folded into [-N/2, N/2).
    double t = scaled - static_cast<double>(y);
    if (t >= nd / 2) {
      t -= nd;
    } else if (t < -nd / 2) {
      t += nd;
    }
    const double denom = std::sin(std::numbers::pi * t / nd);
    if (denom == 0.0) {
      probs[y] = 1.0;
      continue;
    }
    const double num = std::sin(std::numbers::pi * t);
    probs[y] = (num * num) / (nd * nd * denom * denom);
  }
  return PhaseDistribution(num_qubits, std::move(probs));
}

double tvd(const PhaseDistribution &p, const PhaseDistribution &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw ParameterError("tvd: distributions have different register sizes");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += std::abs(p[i] - q[i]);
  }
  return std::min(1.0, 0.5 * s);
}

std::vector<double> PhaseSampling::phases() const {
  if (random_count == 0 && grid_points == 0) {
    throw ParameterError("phase sampling is empty");
  }
  std::vector<double> out;
  out.reserve(random_count + grid_points);
  SeededRng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    out.push_back(rng.uniform());
  }
  for (std::size_t i = 0; i < grid_points; ++i) {
    out.push_back((static_cast<double>(i) + 0.5) / static_cast<double>(grid_points));
  }
  return out;
}

std::vector<MaxTvd> max_tvd_sweep(int num_qubits, std::span<const int> depths, const PhaseSampling &sampling,
                                  unsigned threads) {
  check_distribution_qubits(num_qubits);
  const std::vector<double> phases = sampling.phases();
  const CircuitPlan full = plan_pfa_tqft(num_qubits, num_qubits);
  std::vector<CircuitPlan> plans;
  plans.reserve(depths.size());
  for (int d : depths) {
    plans.push_back(plan_pfa_tqft(num_qubits, d));
  }

  const std::size_t nd = depths.size();
  std::vector<double> values(phases.size() * nd, 0.0);
  detail::parallel_for(phases.size(), threads, [&](std::size_t i) {
    const PhaseDistribution reference = phase_distribution(phases[i], full);
    for (std::size_t k = 0; k < nd; ++k) {
      if (depths[k] == num_qubits) {
        continue;  // identical circuits
      }
      values[i * nd + k] = tvd(reference, phase_distribution(phases[i], plans[k]));
    }
  });

  std::vector<MaxTvd> result(nd);
  for (std::size_t k = 0; k < nd; ++k) {
    result[k].depth = depths[k];
    result[k].argmax_phase = phases.front();
    for (std::size_t i = 0; i < phases.size(); ++i) {
      if (values[i * nd + k] > result[k].value) {
        result[k].value = values[i * nd + k];
        result[k].argmax_phase = phases[i];
      }
    }
  }
  return result;
}

MaxTvd max_tvd(int num_qubits, int depth, const PhaseSampling &sampling, unsigned threads) {
  const int depths[] = {depth};
  return max_tvd_sweep(num_qubits, depths, sampling, threads).front();
}

bool within_success_window(std::uint64_t y, int num_qubits, double phi) {
  const double n = std::ldexp(1.0, num_qubits);
  const double window = std::ldexp(1.0, -num_qubits) * (1.0 + 1e-9);
  return circular_distance(static_cast<double>(y) / n, phi) <= window;
}

double success_probability_exact(const PhaseDistribution &dist, double phi) {
  double s = 0.0;
  for (std::size_t y = 0; y < dist.size(); ++y) {
    if (within_success_window(y, dist.num_qubits(), phi)) {
      s += dist[y];
    }
  }
  return std::min(1.0, s);
}

std::vector<std::uint64_t> sample_outcomes(const PhaseDistribution &dist, std::uint64_t shots, SeededRng &rng) {
  if (shots == 0) {
    throw ParameterError("shots must be positive");
  }
  std::vector<double> cdf(dist.size());
  double acc = 0.0;
  for (std::size_t y = 0; y < dist.size(); ++y) {
    acc += dist[y];
    cdf[y] = acc;
  }
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
      --it;
    }
    out.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
  }
  return out;
}

double success_probability(double phi, int num_qubits, int depth, const SuccessMode &mode) {
  const PhaseDistribution dist = phase_distribution(phi, num_qubits, depth);
  if (std::holds_alternative<ExactMode>(mode)) {
    return success_probability_exact(dist, phi);
  }
  const auto &sampled = std::get<SampledMode>(mode);
  SeededRng rng(sampled.seed);
  const auto outcomes = sample_outcomes(dist, sampled.shots, rng);
  std::uint64_t hits = 0;
  for (auto y : outcomes) {
    hits += within_success_window(y, num_qubits, phi);
  }
  return static_cast<double>(hits) / static_cast<double>(sampled.shots);
}

}  // namespace pfa
