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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "pfa/error.hpp"
#include "pfa/tfim.hpp"

namespace pfa {
namespace {

TEST(TfimHamiltonian, MatchesPauliKroneckerConstruction) {
  for (int n = 2; n <= 6; ++n) {
    for (auto [j, h] : {std::pair{1.0, 0.5}, std::pair{0.7, 1.3}, std::pair{-1.0, 0.2}}) {
      const auto built = build_hamiltonian({n, j, h});
      const auto ref = oracle::pauli_tfim(n, j, h);
      ASSERT_EQ(built.dim(), ref.n);
      for (std::size_t r = 0; r < ref.n; ++r) {
        for (std::size_t c = 0; c < ref.n; ++c) {
          ASSERT_NEAR(built(r, c), ref(r, c).real(), 1e-15) << "n=" << n << " (" << r << "," << c << ")";
          ASSERT_EQ(ref(r, c).imag(), 0.0);
        }
      }
    }
  }
}

TEST(TfimSpectrum, FourSiteLowestLevels) {
  const auto e = tfim_spectrum({4, 1.0, 0.5});
  ASSERT_EQ(e.size(), 16u);
  EXPECT_NEAR(e[0], -3.4270, 1e-3);
  EXPECT_NEAR(e[1], -3.3322, 1e-3);
  EXPECT_NEAR(e[2], -1.8268, 1e-3);
  EXPECT_NEAR(e[3], -1.7321, 1e-3);
  EXPECT_NEAR(e[0], -3.427034, 1e-5);
  EXPECT_NEAR(ground_energy({4, 1.0, 0.5}), e[0], 0.0);
}

TEST(TfimSpectrum, GroundEnergyMatchesCharacteristicPolynomialRoot) {
  for (int n = 2; n <= 4; ++n) {
    const double root = oracle::lowest_root(oracle::pauli_tfim(n, 1.0, 0.5));
    EXPECT_NEAR(ground_energy({n, 1.0, 0.5}), root, 1e-9) << "n=" << n;
  }
}

TEST(TfimSpectrum, SymmetricAboutZeroAndTraceless) {
  for (int n = 2; n <= 8; ++n) {
    const auto e = tfim_spectrum({n, 1.0, 0.5});
    double sum = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      sum += e[i];
      EXPECT_NEAR(e[i], -e[e.size() - 1 - i], 1e-10) << "n=" << n;
    }
    EXPECT_NEAR(sum, 0.0, 1e-10);
  }
}

TEST(TfimSpectrum, LimitingCases) {
  // h = 0: classical chain, ground -J(n-1), doubly degenerate.
  const auto ising = tfim_spectrum({5, 1.0, 0.0});
  EXPECT_NEAR(ising[0], -4.0, 1e-12);
  EXPECT_NEAR(ising[1], -4.0, 1e-12);
  EXPECT_NEAR(ising[2], -2.0, 1e-12);
  // J = 0: free spins, ground -h n.
  EXPECT_NEAR(ground_energy({5, 0.0, 0.8}), -4.0, 1e-12);
}

TEST(TfimSpec, Validation) {
  EXPECT_THROW(build_hamiltonian({1, 1.0, 0.5}), ParameterError);
  EXPECT_THROW(build_hamiltonian({11, 1.0, 0.5}), ParameterError);
  EXPECT_THROW(build_hamiltonian({4, std::nan(""), 0.5}), ParameterError);
  EXPECT_NO_THROW(build_hamiltonian({10, 1.0, 0.5}));
}

TEST(EncodePhase, LinearMapAndRoundTrip) {
  const double s = 2.0;
  EXPECT_DOUBLE_EQ(encode_phase(0.0, s).phi, 0.5);
  EXPECT_DOUBLE_EQ(encode_phase(-1.0, s).phi, 0.25);
  EXPECT_DOUBLE_EQ(encode_phase(-2.0, s).phi, 0.0);
  for (double e : {-1.9, -0.3, 0.0, 1.1, 1.99}) {
    EXPECT_NEAR(decode_phase(encode_phase(e, s)), e, 1e-14);
  }
}

TEST(EncodePhase, TopEndpointWrapsToZero) {
  const auto top = encode_phase(2.0, 2.0);
  EXPECT_EQ(top.phi, 0.0);
  EXPECT_TRUE(top.wrapped);
  EXPECT_FALSE(encode_phase(-2.0, 2.0).wrapped);
  EXPECT_THROW(encode_phase(2.5, 2.0), ParameterError);
  EXPECT_THROW(encode_phase(0.0, 0.0), ParameterError);
}

TEST(EncodePhase, SpectrumScale) {
  const auto e = tfim_spectrum({4, 1.0, 0.5});
  const auto g = encode_phase(e.front(), e);
  EXPECT_NEAR(g.e_scale, -e.front(), 1e-15);
  EXPECT_EQ(g.phi, 0.0);
  const auto first = encode_phase(e[1], e);
  EXPECT_NEAR(first.phi, (e[1] - e[0]) / (2.0 * -e[0]), 1e-15);
}

TEST(EnergyExperiment, GroundStateSitsOnGrid) {
  EnergyExperimentConfig cfg;
  cfg.num_qubits = 12;
  cfg.depth = 12;
  const auto r = qpe_energy_experiment({4, 1.0, 0.5}, cfg);
  EXPECT_TRUE(r.degenerate_on_grid);
  EXPECT_NEAR(r.estimated_energy, r.true_energy, 1e-12);
  EXPECT_NEAR(r.phase_rmse, 0.0, 1e-7);
}

TEST(EnergyExperiment, ExcitedLevelErrorShrinksWithRegister) {
  double previous = 1.0;
  for (int m : {6, 8, 10, 12}) {
    EnergyExperimentConfig cfg;
    cfg.num_qubits = m;
    cfg.depth = m;
    cfg.level = 1;
    const auto r = qpe_energy_experiment({4, 1.0, 0.5}, cfg);
    EXPECT_FALSE(r.degenerate_on_grid);
    // Mode lands within one grid step of the true phase.
    EXPECT_LE(std::abs(r.estimated_energy - r.true_energy), 2.0 * r.encoded.e_scale / std::ldexp(1.0, m) + 1e-12);
    EXPECT_LT(std::abs(r.estimated_energy - r.true_energy), previous + 1e-15);
    previous = std::abs(r.estimated_energy - r.true_energy);
  }
}

TEST(EnergyExperiment, SampledModeIsDeterministic) {
  EnergyExperimentConfig cfg;
  cfg.num_qubits = 10;
  cfg.depth = 5;
  cfg.level = 2;
  cfg.mode = SampledMode{2000, 42};
  const auto a = qpe_energy_experiment({4, 1.0, 0.5}, cfg);
  const auto b = qpe_energy_experiment({4, 1.0, 0.5}, cfg);
  EXPECT_EQ(a.estimated_energy, b.estimated_energy);
  EXPECT_EQ(a.phase_rmse, b.phase_rmse);
}

TEST(EnergyExperiment, ModelColumns) {
  EnergyExperimentConfig cfg;
  cfg.num_qubits = 16;
  cfg.depth = 16;
  cfg.eps_2q = 1e-3;
  const auto r = qpe_energy_experiment({4, 1.0, 0.5}, cfg);
  EXPECT_EQ(r.model.gates, 120u);
  EXPECT_NEAR(r.model_energy_rmse, r.model.rmse * 2.0 * r.encoded.e_scale, 1e-15);
  cfg.level = 16;
  EXPECT_THROW(qpe_energy_experiment({4, 1.0, 0.5}, cfg), ParameterError);
}

}  // namespace
}  // namespace pfa
