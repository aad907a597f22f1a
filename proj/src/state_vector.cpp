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

#include "pfa/state_vector.hpp"

#include <cmath>
#include <string>

#include "pfa/error.hpp"

namespace pfa {

void check_state_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxStateQubits) {
    throw ParameterError("register size must be in [1, " + std::to_string(kMaxStateQubits) + "], got " +
                         std::to_string(num_qubits));
  }
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  check_state_qubits(num_qubits);
  std::size_t n = std::size_t{1} << num_qubits;
  if (index >= n) {
    throw ParameterError("basis index " + std::to_string(index) + " out of range for " +
                         std::to_string(num_qubits) + " qubits");
  }
  std::vector<Amplitude> amplitudes(n);
  amplitudes[index] = 1.0;
  return StateVector(num_qubits, std::move(amplitudes));
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
  check_state_qubits(num_qubits);
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw ParameterError("amplitude array length " + std::to_string(amplitudes.size()) + " is not 2^" +
                         std::to_string(num_qubits));
  }
  StateVector state(num_qubits, std::move(amplitudes));
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw ParameterError("amplitudes are not normalized");
  }
  return state;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto &a : amplitudes_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

}  // namespace pfa
