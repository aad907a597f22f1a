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

#include "pfa/state_vector.hpp"

namespace pfa {

/// Largest register a CircuitPlan may describe. Plans are only gate lists, so
/// this is looser than kMaxStateQubits; applying a plan still needs m <= 24.
inline constexpr int kMaxPlanQubits = 64;

enum class GateKind { kHadamard, kControlledPhase, kBitReversal };

/// One gate of a QFT circuit.
///
/// ControlledPhase applies diag(1, 1, 1, exp(2*pi*i / 2^k)) to (control,
/// target). BitReversal is a classical relabeling of basis indices.
struct GateOp {
  GateKind kind = GateKind::kBitReversal;
  int k = 0;
  int control = -1;
  int target = -1;

  static GateOp hadamard(int target) { return {GateKind::kHadamard, 0, -1, target}; }
  static GateOp controlled_phase(int k, int control, int target) {
    return {GateKind::kControlledPhase, k, control, target};
  }
  static GateOp bit_reversal() { return {}; }

  /// Rotation angle 2*pi / 2^k of a controlled-phase gate, 0 otherwise.
  double angle() const;

  bool operator==(const GateOp &) const = default;
};

/// The depth-d truncated QFT on m qubits as an ordered gate list.
class CircuitPlan {
 public:
  /// Validates every gate against (m, d); throws ParameterError on violation.
  CircuitPlan(int num_qubits, int depth, std::vector<GateOp> gates);

  int num_qubits() const { return num_qubits_; }
  int depth() const { return depth_; }
  const std::vector<GateOp> &gates() const { return gates_; }

  std::uint64_t controlled_phase_count() const;
  std::uint64_t hadamard_count() const;

  /// Line format: "m=<m> d=<d>", then one of "H <t>", "CP <k> <c> <t>",
  /// "BITREV" per gate, each line newline-terminated.
  std::string serialize() const;
  static CircuitPlan parse(std::string_view text);

  bool operator==(const CircuitPlan &) const = default;

 private:
  int num_qubits_;
  int depth_;
  std::vector<GateOp> gates_;
};

/// Builds PFA-TQFT_d: stage q applies H(q), then CP_k for k = 2..min(d, m-q)
/// with control q+k-1 and target q; a single BitReversal closes the circuit.
/// Requires 1 <= d <= m <= kMaxPlanQubits. d is never clamped.
CircuitPlan plan_pfa_tqft(int num_qubits, int depth);

/// Number of controlled-phase gates in PFA-TQFT_d:
/// sum_{j=0}^{m-1} max(0, min(d-1, m-j-1)).
std::uint64_t gate_count(int num_qubits, int depth);

enum class Direction { kForward, kInverse };

/// Applies a plan gate by gate. The inverse direction walks the gates in
/// reverse order with conjugated phases.
StateVector apply_plan(StateVector state, const CircuitPlan &plan, Direction direction);

/// Maps a basis index to the index with its m low bits reversed.
std::uint64_t reverse_bits(std::uint64_t index, int num_qubits);

/// Dense QFT unitary, entry (y, x) = exp(2*pi*i*x*y/N)/sqrt(N), stored
/// row-major. Intended as a test oracle; refuses m > 8.
std::vector<Amplitude> dense_qft_matrix(int num_qubits);

}  // namespace pfa
