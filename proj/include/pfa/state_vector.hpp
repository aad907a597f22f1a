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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pfa {

using Amplitude = std::complex<double>;

/// Largest register the statevector engine will allocate (2^24 amplitudes).
inline constexpr int kMaxStateQubits = 24;

/// Normalized amplitude array of length 2^m.
///
/// Qubit q (0-based) corresponds to bit (m - 1 - q) of the basis index, so
/// qubit 0 is the most significant bit.
class StateVector {
 public:
  /// Computational basis state |index>.
  static StateVector basis(int num_qubits, std::uint64_t index);

  /// Takes ownership of `amplitudes`. The length must be 2^num_qubits and the
  /// norm must be 1 within 1e-10.
  static StateVector from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude &operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;

  /// Raw mutable access for gate kernels; callers are responsible for
  /// keeping the state unitary.
  std::span<Amplitude> mutable_amplitudes() { return amplitudes_; }

 private:
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Throws ParameterError unless 1 <= num_qubits <= kMaxStateQubits.
void check_state_qubits(int num_qubits);

}  // namespace pfa
