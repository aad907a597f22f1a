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

namespace pfa {

/// Reduces a phase modulo 1 into [0, 1).
double wrap_phase(double phi);

/// Distance between two phases on the unit circle, in [0, 0.5].
/// Inputs are reduced modulo 1 first.
double circular_distance(double a, double b);

}  // namespace pfa
