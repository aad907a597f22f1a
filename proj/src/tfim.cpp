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

#include "pfa/tfim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "pfa/error.hpp"
#include "pfa/phase.hpp"

namespace pfa {

void TfimSpec::validate() const {
  if (sites < 2) {
    throw ParameterError("TFIM needs at least 2 sites, got " + std::to_string(sites));
  }
  if (sites > 10 || (std::size_t{1} << sites) > kMaxEigenDim) {
    throw ParameterError("TFIM dimension 2^" + std::to_string(sites) + " exceeds " + std::to_string(kMaxEigenDim));
  }
  if (!std::isfinite(coupling) || !std::isfinite(field)) {
    throw ParameterError("TFIM couplings must be finite");
  }
}

SymmetricMatrix build_hamiltonian(const TfimSpec &spec) {
  spec.validate();
  const std::size_t dim = std::size_t{1} << spec.sites;
  SymmetricMatrix h(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 0; i + 1 < spec.sites; ++i) {
      const bool a = (s >> i) & 1u;
      const bool b = (s >> (i + 1)) & 1u;
      diag += (a == b) ? -spec.coupling : spec.coupling;
    }
    h.set(s, s, diag);
    for (int i = 0; i < spec.sites; ++i) {
      const std::size_t t = s ^ (std::size_t{1} << i);
      if (s < t) {
        h.set(s, t, -spec.field);
      }
    }
  }
  return h;
}

std::vector<double> tfim_spectrum(const TfimSpec &spec) { return eigendecompose(build_hamiltonian(spec)).values; }

double ground_energy(const TfimSpec &spec) { return tfim_spectrum(spec).front(); }

namespace {

// Energies this close (relative to E_scale) to an end of the range are
// treated as sitting exactly on it.
constexpr double kEndpointSlack = 1e-12;

}  // namespace

EncodedPhase encode_phase(double energy, double e_scale) {
  if (!(e_scale > 0.0) || !std::isfinite(e_scale)) {
    throw ParameterError("encode_phase: E_scale must be positive");
  }
  if (std::abs(energy) > e_scale * (1.0 + kEndpointSlack)) {
    throw ParameterError("encode_phase: |E| exceeds E_scale");
  }
  EncodedPhase out;
  out.e_scale = e_scale;
  double phi = (energy + e_scale) / (2.0 * e_scale);
  if (phi < 0.5 * kEndpointSlack) {
    phi = 0.0;
  } else if (phi > 1.0 - 0.5 * kEndpointSlack) {
    phi = 0.0;
    out.wrapped = true;
  }
  out.phi = phi;
  return out;
}

EncodedPhase encode_phase(double energy, std::span<const double> spectrum) {
  if (spectrum.empty()) {
    throw ParameterError("encode_phase: empty spectrum");
  }
  double e_scale = 0.0;
  for (double e : spectrum) {
    e_scale = std::max(e_scale, std::abs(e));
  }
  return encode_phase(energy, e_scale);
}

double decode_phase(double phi, double e_scale) { return (2.0 * phi - 1.0) * e_scale; }

double decode_phase(const EncodedPhase &encoded) { return decode_phase(encoded.phi, encoded.e_scale); }

EnergyExperimentResult qpe_energy_experiment(const TfimSpec &spec, const EnergyExperimentConfig &config) {
  const std::vector<double> spectrum = tfim_spectrum(spec);
  if (config.level >= spectrum.size()) {
    throw ParameterError("eigenvalue level " + std::to_string(config.level) + " out of range");
  }
  const int m = config.num_qubits;
  const ErrorBudget model = rmse_model(m, config.depth, config.eps_2q, config.noise_constant);

  EnergyExperimentResult r;
  r.true_energy = spectrum[config.level];
  r.encoded = encode_phase(r.true_energy, spectrum);
  const double phi = r.encoded.phi;
  const double n = std::ldexp(1.0, m);
  r.degenerate_on_grid = std::floor(phi * n) == phi * n;

  const PhaseDistribution dist = phase_distribution(phi, m, config.depth);
  if (std::holds_alternative<ExactMode>(config.mode)) {
    double acc = 0.0;
    for (std::size_t y = 0; y < dist.size(); ++y) {
      const double e = circular_distance(static_cast<double>(y) / n, phi);
      acc += dist[y] * e * e;
    }
    r.phase_rmse = std::sqrt(acc);
    r.estimated_phase = static_cast<double>(dist.mode()) / n;
  } else {
    const auto &sampled = std::get<SampledMode>(config.mode);
    SeededRng rng(sampled.seed);
    const auto outcomes = sample_outcomes(dist, sampled.shots, rng);
    std::map<std::uint64_t, std::uint64_t> counts;
    double acc = 0.0;
    for (auto y : outcomes) {
      ++counts[y];
      const double e = circular_distance(static_cast<double>(y) / n, phi);
      acc += e * e;
    }
    r.phase_rmse = std::sqrt(acc / static_cast<double>(sampled.shots));
    auto best = std::max_element(counts.begin(), counts.end(),
                                 [](const auto &a, const auto &b) { return a.second < b.second; });
    r.estimated_phase = static_cast<double>(best->first) / n;
  }
  r.estimated_energy = decode_phase(r.estimated_phase, r.encoded.e_scale);
  r.energy_rmse = r.phase_rmse * 2.0 * r.encoded.e_scale;
  r.model = model;
  r.model_energy_rmse = model.energy_rmse(r.encoded.e_scale);
  return r;
}

}  // namespace pfa
