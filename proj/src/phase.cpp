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

#include "pfa/phase.hpp"

#include <algorithm>
#include <cmath>

namespace pfa {

double wrap_phase(double phi) {
  double w = phi - std::floor(phi);
  // floor can leave w == 1.0 for tiny negative inputs.
  return w >= 1.0 ? 0.0 : w;
}

double circular_distance(double a, double b) {
  double diff = std::abs(wrap_phase(a) - wrap_phase(b));
  return std::min(diff, 1.0 - diff);
}

}  // namespace pfa
