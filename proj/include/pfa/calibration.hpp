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
#include <string>
#include <string_view>
#include <vector>

namespace pfa {

/// Noise constant of the RMSE model, calibrated against IBM Eagle r3.
inline constexpr double kDefaultNoiseConstant = 0.033;

/// A device and its two-qubit depolarizing error rate.
struct Platform {
  std::string name;
  double eps_2q = 0.0;
};

/// Immutable list of platforms.
///
/// Text format: one record per line, `<name>,<eps_2q>`. Blank lines and lines
/// starting with '#' are ignored. Names may contain spaces.
class PlatformRegistry {
 public:
  explicit PlatformRegistry(std::vector<Platform> platforms);

  /// IBM Eagle r3, IBM Heron r2, IonQ Aria, IQM Garnet.
  static PlatformRegistry builtin();
  static PlatformRegistry parse(std::string_view text);
  static PlatformRegistry load(const std::string &path);

  const std::vector<Platform> &platforms() const { return platforms_; }
  const Platform &find(std::string_view name) const;

 private:
  std::vector<Platform> platforms_;
};

/// floor(log2(2*pi / eps_2q)), the deepest angle index whose rotation
/// 2*pi/2^d still exceeds the gate error. Requires 0 < eps_2q < 2*pi.
int d_star(double eps_2q);

/// Rotation angle 2*pi / 2^k.
double rotation_angle(int k);

enum class BoundForm { kTight, kLoose };

/// (m-d) sin(pi/2^d) for kTight, pi(m-d)/2^d for kLoose. Requires 1 <= d <= m.
double tvd_bound(int num_qubits, int depth, BoundForm form);

/// log2(pi*m/alpha), unrounded. Requires 0 < alpha < 1 and m >= 1.
double equal_budget_depth(double alpha, int num_qubits);

/// ceil(log2 m) + 2. Requires m >= 2.
int cliff_depth(int num_qubits);

/// Three-term RMSE decomposition, in phase units.
struct ErrorBudget {
  int num_qubits = 0;
  int depth = 0;
  double eps_2q = 0.0;
  double noise_constant = kDefaultNoiseConstant;
  std::uint64_t gates = 0;
  double tv = 0.0;
  double precision_term = 0.0;
  double truncation_term = 0.0;
  double noise_term = 0.0;
  double rmse = 0.0;

  /// Linear decoding E = (2 phi - 1) E_scale scales phase errors by 2 E_scale.
  double energy_rmse(double e_scale) const { return rmse * 2.0 * e_scale; }
};

/// RMSE^2 = 1/(3 * 4^m) + TV^2/3 + (G eps c)^2 with TV = pi(m-d)/2^d and
/// G = gate_count(m, d). d == m is the full QFT (TV = 0, G = m(m-1)/2).
/// Requires 1 <= d <= m <= 64, 0 <= eps_2q < 1, c >= 0.
ErrorBudget rmse_model(int num_qubits, int depth, double eps_2q, double noise_constant = kDefaultNoiseConstant);

struct Crossover {
  int num_qubits = 0;
  int depth = 0;
  double noise_constant = 0.0;
  double tv = 0.0;
  std::uint64_t gates_full = 0;
  std::uint64_t gates = 0;
  double eps_cross = 0.0;
};

/// Noise rate above which the truncated circuit has the smaller model RMSE:
/// (TV/sqrt(3)) / (c sqrt(G_full^2 - G^2)). Requires 1 <= d < m and c > 0.
Crossover crossover(int num_qubits, int depth, double noise_constant = kDefaultNoiseConstant);
double crossover_eps(int num_qubits, int depth, double noise_constant = kDefaultNoiseConstant);

struct PlatformRow {
  std::string name;
  double eps_2q = 0.0;
  int d_star = 0;
  /// Depth actually used: d_star, or m when d_star > m (then full_qft is set).
  int depth = 0;
  bool full_qft = false;
  std::uint64_t gates = 0;
  std::uint64_t gates_full = 0;
  /// 1 - gates / gates_full, as a fraction.
  double reduction = 0.0;
  double tv_bound_loose = 0.0;
};

std::vector<PlatformRow> platform_report(int num_qubits, const PlatformRegistry &registry);

}  // namespace pfa
