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
#include <vector>

#include "pfa/calibration.hpp"
#include "pfa/qpe.hpp"
#include "pfa/symmetric_matrix.hpp"

namespace pfa {

/// Open-boundary chain H = -J sum Z_i Z_{i+1} - h sum X_i on n sites.
struct TfimSpec {
  int sites = 4;
  double coupling = 1.0;
  double field = 0.5;

  /// Throws ParameterError unless n >= 2 and 2^n <= kMaxEigenDim.
  void validate() const;
};

/// Site i is bit i of the basis index; Z_i = +1 on bit value 0.
SymmetricMatrix build_hamiltonian(const TfimSpec &spec);

/// All eigenvalues, ascending.
std::vector<double> tfim_spectrum(const TfimSpec &spec);
double ground_energy(const TfimSpec &spec);

/// An energy mapped onto the phase circle by phi = (E + E_scale) / (2 E_scale).
struct EncodedPhase {
  double phi = 0.0;
  double e_scale = 0.0;
  /// Set when E = +E_scale produced phi = 1, which was wrapped to 0.
  bool wrapped = false;
};

/// Requires e_scale > 0 and |energy| <= e_scale (within 1e-12 relative).
EncodedPhase encode_phase(double energy, double e_scale);
/// Uses E_scale = max_i |spectrum_i|.
EncodedPhase encode_phase(double energy, std::span<const double> spectrum);
double decode_phase(const EncodedPhase &encoded);
double decode_phase(double phi, double e_scale);

struct EnergyExperimentConfig {
  int num_qubits = 16;
  int depth = 16;
  double eps_2q = 0.0;
  double noise_constant = kDefaultNoiseConstant;
  /// Eigenvalue index (0 = ground state).
  std::size_t level = 0;
  SuccessMode mode = ExactMode{};
};

struct EnergyExperimentResult {
  double true_energy = 0.0;
  EncodedPhase encoded;
  /// The encoded phase coincides with an outcome y/N, so the noiseless
  /// distribution is a delta and the statevector RMSE is trivially zero.
  bool degenerate_on_grid = false;
  double estimated_phase = 0.0;
  double estimated_energy = 0.0;
  double phase_rmse = 0.0;
  double energy_rmse = 0.0;
  ErrorBudget model;
  double model_energy_rmse = 0.0;
};

/// Encodes the chosen eigenvalue as a phase, runs noiseless (truncated) QPE on
/// it, and reports the statevector RMSE next to the analytical noise model.
/// Exact mode: phase RMSE = sqrt(sum_y P(y) circ_dist(y/N, phi)^2) and the
/// estimate is the most likely outcome. Sampled mode uses the shot average and
/// the most frequent outcome.
EnergyExperimentResult qpe_energy_experiment(const TfimSpec &spec, const EnergyExperimentConfig &config);

}  // namespace pfa
