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

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "pfa/qft.hpp"
#include "pfa/rng.hpp"
#include "pfa/state_vector.hpp"

namespace pfa {

/// Largest register used for distribution experiments.
inline constexpr int kMaxDistributionQubits = 20;

/// Outcome probabilities of measuring an m-qubit register.
class PhaseDistribution {
 public:
  /// Validates length 2^m, entries in [0, 1 + 1e-12] and total mass 1 within 1e-10.
  PhaseDistribution(int num_qubits, std::vector<double> probabilities);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return probabilities_.size(); }
  std::span<const double> probabilities() const { return probabilities_; }
  double operator[](std::size_t y) const { return probabilities_[y]; }

  /// Outcome with the largest probability (lowest index on ties).
  std::uint64_t mode() const;

 private:
  int num_qubits_;
  std::vector<double> probabilities_;
};

/// (1/sqrt(N)) sum_j exp(2*pi*i*j*phi) |j>. phi is reduced modulo 1.
StateVector kickback_state(double phi, int num_qubits);

/// QPE outcome distribution: the inverse of PFA-TQFT_d applied to the
/// kickback state. d == m gives the full-QFT distribution.
PhaseDistribution phase_distribution(double phi, int num_qubits, int depth);
PhaseDistribution phase_distribution(double phi, const CircuitPlan &plan);

/// Fejer-kernel form of the full-QFT distribution, evaluated without circuits.
PhaseDistribution closed_form_full_distribution(double phi, int num_qubits);

/// Total variation distance, (1/2) sum |p - q|.
double tvd(const PhaseDistribution &p, const PhaseDistribution &q);

/// Phases at which max_tvd and the cliff sweeps evaluate distributions:
/// `random_count` uniform draws from SeededRng(seed), followed by the
/// cell midpoints (i + 0.5) / grid_points.
struct PhaseSampling {
  std::size_t random_count = 500;
  std::uint64_t seed = 42;
  std::size_t grid_points = 4096;

  std::vector<double> phases() const;
};

struct MaxTvd {
  int depth = 0;
  double value = 0.0;
  double argmax_phase = 0.0;
};

/// max over sampled phases of tvd(P_phi, P_phi^d). Ties keep the earliest phase.
/// `threads` == 0 picks the hardware concurrency.
MaxTvd max_tvd(int num_qubits, int depth, const PhaseSampling &sampling, unsigned threads = 0);

/// max_tvd for several depths at once, sharing the full-QFT distribution of
/// each phase. Results come back in the order of `depths`.
std::vector<MaxTvd> max_tvd_sweep(int num_qubits, std::span<const int> depths,
                                  const PhaseSampling &sampling, unsigned threads = 0);

struct ExactMode {};
struct SampledMode {
  std::uint64_t shots = 1000;
  std::uint64_t seed = 42;
};
using SuccessMode = std::variant<ExactMode, SampledMode>;

/// True when outcome y lies within circular distance 2^-m of phi.
bool within_success_window(std::uint64_t y, int num_qubits, double phi);

/// Probability mass inside the success window.
double success_probability_exact(const PhaseDistribution &dist, double phi);

/// Draws `shots` outcomes by inverse-CDF sampling.
std::vector<std::uint64_t> sample_outcomes(const PhaseDistribution &dist, std::uint64_t shots, SeededRng &rng);

/// P[|y/N - phi| <= 2^-m] for PFA-TQFT_d, exactly or from sampled shots.
double success_probability(double phi, int num_qubits, int depth, const SuccessMode &mode);

}  // namespace pfa
