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
#include <string>
#include <string_view>
#include <vector>

namespace pfa::cli {

/// Comma-separated integers and inclusive ranges: "4,5,6", "1..5", "4,8..10".
std::vector<int> parse_int_list(std::string_view spec);

/// Truncation depths for register size m. Accepts everything parse_int_list
/// does plus the keywords "all" (1..m) and "full" (m). Depths outside [1, m]
/// are rejected rather than clamped.
std::vector<int> expand_depths(std::string_view spec, int num_qubits);

/// Comma-separated reals and generated ranges:
///   "1e-3,5e-3"           explicit list
///   "1e-4..1e-2:log8"     8 log-spaced points, endpoints included
///   "0..1:lin5"           5 linearly spaced points
std::vector<double> parse_real_list(std::string_view spec);

/// Phase set for cliff-style sweeps: "grid:P" (midpoints (i+0.5)/P),
/// "random:N" (seeded uniform draws), "list:a,b,..." or a bare count N
/// (same as random:N).
struct PhaseSpec {
  enum class Kind { kGrid, kRandom, kList } kind = Kind::kGrid;
  std::size_t count = 256;
  std::vector<double> values;

  /// Resolved phases; random draws use SeededRng(seed). List values are
  /// reduced modulo 1 and `wrapped_inputs` counts how many needed it.
  std::vector<double> resolve(std::uint64_t seed, std::size_t *wrapped_inputs = nullptr) const;
  std::string to_string() const;
};

PhaseSpec parse_phase_spec(std::string_view spec);

}  // namespace pfa::cli
