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

#include "pfa/calibration.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "pfa/error.hpp"
#include "pfa/qft.hpp"

namespace pfa {

namespace {

void check_rate(double eps_2q, const std::string &context) {
  if (!(eps_2q > 0.0 && eps_2q < 1.0)) {
    throw ParameterError(context + ": two-qubit error rate must lie in (0, 1), got " + std::to_string(eps_2q));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

PlatformRegistry::PlatformRegistry(std::vector<Platform> platforms) : platforms_(std::move(platforms)) {
  for (const auto &p : platforms_) {
    if (p.name.empty()) {
      throw ParameterError("platform name must not be empty");
    }
    check_rate(p.eps_2q, "platform '" + p.name + "'");
  }
}

PlatformRegistry PlatformRegistry::builtin() {
  return PlatformRegistry({
      {"IBM Eagle r3", 3e-3},
      {"IBM Heron r2", 5e-4},
      {"IonQ Aria", 3e-4},
      {"IQM Garnet", 2e-3},
  });
}

PlatformRegistry PlatformRegistry::parse(std::string_view text) {
  std::vector<Platform> platforms;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto comma = line.rfind(',');
    if (comma == std::string_view::npos) {
      throw ParameterError("platform file line " + std::to_string(line_no) + ": expected '<name>,<eps_2q>'");
    }
    std::string name(trim(line.substr(0, comma)));
    std::string rate(trim(line.substr(comma + 1)));
    char *end = nullptr;
    errno = 0;
    double eps = std::strtod(rate.c_str(), &end);
    if (rate.empty() || end != rate.c_str() + rate.size() || errno != 0) {
      throw ParameterError("platform file line " + std::to_string(line_no) + ": bad error rate '" + rate + "'");
    }
    platforms.push_back({std::move(name), eps});
  }
  if (platforms.empty()) {
    throw ParameterError("platform file contains no records");
  }
  return PlatformRegistry(std::move(platforms));
}

PlatformRegistry PlatformRegistry::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ParameterError("cannot open platform file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Platform &PlatformRegistry::find(std::string_view name) const {
  for (const auto &p : platforms_) {
    if (p.name == name) {
      return p;
    }
  }
  throw ParameterError("unknown platform '" + std::string(name) + "'");
}

double rotation_angle(int k) { return std::ldexp(2.0 * std::numbers::pi, -k); }

int d_star(double eps_2q) {
  if (!(eps_2q > 0.0 && eps_2q < 2.0 * std::numbers::pi)) {
    throw ParameterError("d_star: error rate must lie in (0, 2*pi), got " + std::to_string(eps_2q));
  }
  // floor(log2(2pi/eps)) is the largest d with 2pi/2^d >= eps. Start from the
  // logarithm and settle the boundary with exact power-of-two scaling.
  int d = static_cast<int>(std::floor(std::log2(2.0 * std::numbers::pi / eps_2q)));
  while (rotation_angle(d + 1) >= eps_2q) {
    ++d;
  }
  while (rotation_angle(d) < eps_2q) {
    --d;
  }
  return d;
}

double tvd_bound(int num_qubits, int depth, BoundForm form) {
  if (num_qubits < 1 || depth < 1 || depth > num_qubits) {
    throw ParameterError("tvd_bound requires 1 <= d <= m");
  }
  const double omitted = static_cast<double>(num_qubits - depth);
  if (form == BoundForm::kTight) {
    return omitted * std::sin(std::ldexp(std::numbers::pi, -depth));
  }
  return omitted * std::ldexp(std::numbers::pi, -depth);
}

double equal_budget_depth(double alpha, int num_qubits) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("equal_budget_depth: alpha must lie in (0, 1)");
  }
  if (num_qubits < 1) {
    throw ParameterError("equal_budget_depth: m must be positive");
  }
  return std::log2(std::numbers::pi * num_qubits / alpha);
}

int cliff_depth(int num_qubits) {
  if (num_qubits < 2) {
    throw ParameterError("cliff_depth requires m >= 2");
  }
  return std::bit_width(static_cast<unsigned>(num_qubits - 1)) + 2;
}

ErrorBudget rmse_model(int num_qubits, int depth, double eps_2q, double noise_constant) {
  if (num_qubits < 1 || num_qubits > kMaxPlanQubits || depth < 1 || depth > num_qubits) {
    throw ParameterError("rmse_model requires 1 <= d <= m <= " + std::to_string(kMaxPlanQubits));
  }
  if (!(eps_2q >= 0.0 && eps_2q < 1.0)) {
    throw ParameterError("rmse_model: eps_2q must lie in [0, 1)");
  }
  if (!(noise_constant >= 0.0)) {
    throw ParameterError("rmse_model: noise constant must be nonnegative");
  }
  ErrorBudget b;
  b.num_qubits = num_qubits;
  b.depth = depth;
  b.eps_2q = eps_2q;
  b.noise_constant = noise_constant;
  b.gates = gate_count(num_qubits, depth);
  b.tv = tvd_bound(num_qubits, depth, BoundForm::kLoose);
  b.precision_term = std::ldexp(1.0 / 3.0, -2 * num_qubits);
  b.truncation_term = b.tv * b.tv / 3.0;
  const double noise = static_cast<double>(b.gates) * eps_2q * noise_constant;
  b.noise_term = noise * noise;
  b.rmse = std::sqrt(b.precision_term + b.truncation_term + b.noise_term);
  return b;
}

Crossover crossover(int num_qubits, int depth, double noise_constant) {
  if (num_qubits < 2 || num_qubits > kMaxPlanQubits || depth < 1 || depth >= num_qubits) {
    throw ParameterError("crossover requires 1 <= d < m; at d = m both circuits coincide and no threshold exists");
  }
  if (!(noise_constant > 0.0)) {
    throw ParameterError("crossover: noise constant must be positive");
  }
  Crossover x;
  x.num_qubits = num_qubits;
  x.depth = depth;
  x.noise_constant = noise_constant;
  x.tv = tvd_bound(num_qubits, depth, BoundForm::kLoose);
  x.gates_full = gate_count(num_qubits, num_qubits);
  x.gates = gate_count(num_qubits, depth);
  const double gf = static_cast<double>(x.gates_full);
  const double g = static_cast<double>(x.gates);
  x.eps_cross = (x.tv / std::sqrt(3.0)) / (noise_constant * std::sqrt(gf * gf - g * g));
  return x;
}

double crossover_eps(int num_qubits, int depth, double noise_constant) {
  return crossover(num_qubits, depth, noise_constant).eps_cross;
}

std::vector<PlatformRow> platform_report(int num_qubits, const PlatformRegistry &registry) {
  if (num_qubits < 2 || num_qubits > kMaxPlanQubits) {
    throw ParameterError("platform_report requires 2 <= m <= " + std::to_string(kMaxPlanQubits));
  }
  std::vector<PlatformRow> rows;
  for (const auto &p : registry.platforms()) {
    PlatformRow row;
    row.name = p.name;
    row.eps_2q = p.eps_2q;
    row.d_star = d_star(p.eps_2q);
    row.full_qft = row.d_star >= num_qubits;
    row.depth = std::clamp(row.d_star, 1, num_qubits);
    row.gates = gate_count(num_qubits, row.depth);
    row.gates_full = gate_count(num_qubits, num_qubits);
    row.reduction = 1.0 - static_cast<double>(row.gates) / static_cast<double>(row.gates_full);
    row.tv_bound_loose = tvd_bound(num_qubits, row.depth, BoundForm::kLoose);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pfa
