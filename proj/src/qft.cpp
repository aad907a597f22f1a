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

#include "pfa/qft.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <algorithm>
#include <string>
#include <utility>

#include "pfa/error.hpp"

namespace pfa {

double GateOp::angle() const {
  if (kind != GateKind::kControlledPhase) {
    return 0.0;
  }
  return std::ldexp(2.0 * std::numbers::pi, -k);
}

namespace {

void check_plan_range(int num_qubits, int depth) {
  if (num_qubits < 1 || num_qubits > kMaxPlanQubits) {
    throw ParameterError("register size must be in [1, " + std::to_string(kMaxPlanQubits) + "], got " +
                         std::to_string(num_qubits));
  }
  if (depth < 1 || depth > num_qubits) {
    throw ParameterError("truncation depth must satisfy 1 <= d <= m (m=" + std::to_string(num_qubits) +
                         ", d=" + std::to_string(depth) + ")");
  }
}

std::string describe(const GateOp &g) {
  switch (g.kind) {
    case GateKind::kHadamard:
      return "H " + std::to_string(g.target);
    case GateKind::kControlledPhase:
      return "CP " + std::to_string(g.k) + " " + std::to_string(g.control) + " " + std::to_string(g.target);
    case GateKind::kBitReversal:
      return "BITREV";
  }
  return "?";
}

}  // namespace

CircuitPlan::CircuitPlan(int num_qubits, int depth, std::vector<GateOp> gates)
    : num_qubits_(num_qubits), depth_(depth), gates_(std::move(gates)) {
  check_plan_range(num_qubits, depth);
  auto in_range = [&](int q) { return q >= 0 && q < num_qubits; };
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const GateOp &g = gates_[i];
    switch (g.kind) {
      case GateKind::kHadamard:
        if (!in_range(g.target)) {
          throw ParameterError("gate " + std::to_string(i) + " (" + describe(g) + "): qubit out of range");
        }
        break;
      case GateKind::kControlledPhase:
        if (!in_range(g.target) || !in_range(g.control) || g.control == g.target) {
          throw ParameterError("gate " + std::to_string(i) + " (" + describe(g) + "): invalid control/target");
        }
        if (g.k < 2 || g.k > depth) {
          throw ParameterError("gate " + std::to_string(i) + " (" + describe(g) + "): angle index outside [2, d]");
        }
        break;
      case GateKind::kBitReversal:
        if (i + 1 != gates_.size()) {
          throw ParameterError("BITREV must be the last gate");
        }
        break;
    }
  }
  if (gates_.empty() || gates_.back().kind != GateKind::kBitReversal) {
    throw ParameterError("plan must end with exactly one BITREV");
  }
  if (hadamard_count() != static_cast<std::uint64_t>(num_qubits)) {
    throw ParameterError("plan must contain exactly m Hadamards");
  }
  if (controlled_phase_count() != gate_count(num_qubits, depth)) {
    throw ParameterError("plan has " + std::to_string(controlled_phase_count()) +
                         " controlled-phase gates, expected " + std::to_string(gate_count(num_qubits, depth)));
  }
}

std::uint64_t CircuitPlan::controlled_phase_count() const {
  std::uint64_t n = 0;
  for (const auto &g : gates_) {
    n += g.kind == GateKind::kControlledPhase;
  }
  return n;
}

std::uint64_t CircuitPlan::hadamard_count() const {
  std::uint64_t n = 0;
  for (const auto &g : gates_) {
    n += g.kind == GateKind::kHadamard;
  }
  return n;
}

std::string CircuitPlan::serialize() const {
  std::string out = "m=" + std::to_string(num_qubits_) + " d=" + std::to_string(depth_) + "\n";
  for (const auto &g : gates_) {
    out += describe(g);
    out += '\n';
  }
  return out;
}

namespace {

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParameterError("plan line " + std::to_string(line_no) + ": expected integer, got '" + std::string(token) +
                         "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

}  // namespace

CircuitPlan CircuitPlan::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  if (lines.empty()) {
    throw ParameterError("plan text is empty");
  }
  auto header = split_ws(lines[0]);
  if (header.size() != 2 || !header[0].starts_with("m=") || !header[1].starts_with("d=")) {
    throw ParameterError("plan line 1: expected header 'm=<m> d=<d>'");
  }
  const int m = parse_int(header[0].substr(2), 1);
  const int d = parse_int(header[1].substr(2), 1);

  std::vector<GateOp> gates;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = split_ws(lines[i]);
    const std::size_t line_no = i + 1;
    if (tok.empty()) {
      continue;
    }
    if (tok[0] == "H" && tok.size() == 2) {
      gates.push_back(GateOp::hadamard(parse_int(tok[1], line_no)));
    } else if (tok[0] == "CP" && tok.size() == 4) {
      gates.push_back(GateOp::controlled_phase(parse_int(tok[1], line_no), parse_int(tok[2], line_no),
                                               parse_int(tok[3], line_no)));
    } else if (tok[0] == "BITREV" && tok.size() == 1) {
      gates.push_back(GateOp::bit_reversal());
    } else {
      throw ParameterError("plan line " + std::to_string(line_no) + ": unrecognized gate '" +
                           std::string(lines[i]) + "'");
    }
  }
  return CircuitPlan(m, d, std::move(gates));
}

CircuitPlan plan_pfa_tqft(int num_qubits, int depth) {
  check_plan_range(num_qubits, depth);
  std::vector<GateOp> gates;
  gates.reserve(static_cast<std::size_t>(num_qubits) + gate_count(num_qubits, depth) + 1);
  for (int q = 0; q < num_qubits; ++q) {
    gates.push_back(GateOp::hadamard(q));
    const int k_max = std::min(depth, num_qubits - q);
    for (int k = 2; k <= k_max; ++k) {
      gates.push_back(GateOp::controlled_phase(k, q + k - 1, q));
    }
  }
  gates.push_back(GateOp::bit_reversal());
  return CircuitPlan(num_qubits, depth, std::move(gates));
}

std::uint64_t gate_count(int num_qubits, int depth) {
  if (num_qubits < 1 || depth < 1 || depth > num_qubits) {
    throw ParameterError("gate_count requires 1 <= d <= m (m=" + std::to_string(num_qubits) +
                         ", d=" + std::to_string(depth) + ")");
  }
  std::uint64_t total = 0;
  for (int j = 0; j < num_qubits; ++j) {
    total += static_cast<std::uint64_t>(std::max(0, std::min(depth - 1, num_qubits - j - 1)));
  }
  return total;
}

std::uint64_t reverse_bits(std::uint64_t index, int num_qubits) {
  std::uint64_t r = 0;
  for (int b = 0; b < num_qubits; ++b) {
    r = (r << 1) | ((index >> b) & 1u);
  }
  return r;
}

namespace {

void apply_hadamard(std::span<Amplitude> amps, int num_qubits, int qubit) {
  const std::size_t stride = std::size_t{1} << (num_qubits - 1 - qubit);
  const double h = 1.0 / std::numbers::sqrt2;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Amplitude a = amps[i];
      const Amplitude b = amps[i + stride];
      amps[i] = h * (a + b);
      amps[i + stride] = h * (a - b);
    }
  }
}

void apply_controlled_phase(std::span<Amplitude> amps, int num_qubits, const GateOp &g, double sign) {
  const std::size_t mask = (std::size_t{1} << (num_qubits - 1 - g.control)) |
                           (std::size_t{1} << (num_qubits - 1 - g.target));
  const Amplitude phase = std::polar(1.0, sign * g.angle());
  // Visit only indices with both bits set: enumerate subsets of ~mask and
  // OR the two bits back in.
  const std::size_t full = amps.size() - 1;
  const std::size_t free_bits = full & ~mask;
  std::size_t sub = 0;
  do {
    amps[sub | mask] *= phase;
    sub = (sub - free_bits) & free_bits;
  } while (sub != 0);
}

void apply_bit_reversal(std::span<Amplitude> amps, int num_qubits) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const std::size_t r = reverse_bits(i, num_qubits);
    if (i < r) {
      std::swap(amps[i], amps[r]);
    }
  }
}

void apply_gate(std::span<Amplitude> amps, int num_qubits, const GateOp &g, double sign) {
  switch (g.kind) {
    case GateKind::kHadamard:
      apply_hadamard(amps, num_qubits, g.target);
      break;
    case GateKind::kControlledPhase:
      apply_controlled_phase(amps, num_qubits, g, sign);
      break;
    case GateKind::kBitReversal:
      apply_bit_reversal(amps, num_qubits);
      break;
  }
}

}  // namespace

StateVector apply_plan(StateVector state, const CircuitPlan &plan, Direction direction) {
  if (state.num_qubits() != plan.num_qubits()) {
    throw ParameterError("apply_plan: state has " + std::to_string(state.num_qubits()) + " qubits, plan has " +
                         std::to_string(plan.num_qubits()));
  }
  const int m = plan.num_qubits();
  auto amps = state.mutable_amplitudes();
  const auto &gates = plan.gates();
  if (direction == Direction::kForward) {
    for (const auto &g : gates) {
      apply_gate(amps, m, g, +1.0);
    }
  } else {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
      apply_gate(amps, m, *it, -1.0);
    }
  }
  return state;
}

std::vector<Amplitude> dense_qft_matrix(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 8) {
    throw ParameterError("dense_qft_matrix is limited to 1 <= m <= 8");
  }
  const std::size_t n = std::size_t{1} << num_qubits;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Amplitude> u(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      // Reduce x*y mod N before scaling so the angle stays exact.
      const std::size_t r = (x * y) & (n - 1);
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
      u[y * n + x] = std::polar(inv_sqrt_n, theta);
    }
  }
  return u;
}

}  // namespace pfa
