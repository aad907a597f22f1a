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
#include <span>
#include <vector>

namespace pfa {

/// Dense real symmetric matrix. Every mutation writes both (i, j) and (j, i),
/// so symmetry holds exactly.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  double trace() const;
  double frobenius_norm() const;

  /// Row-major storage.
  std::span<const double> data() const { return data_; }

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
struct Eigensystem {
  std::size_t dim = 0;
  std::vector<double> values;
  /// Eigenvector k occupies vectors[k * dim, (k + 1) * dim).
  std::vector<double> vectors;

  std::span<const double> vector(std::size_t k) const {
    return std::span<const double>(vectors).subspan(k * dim, dim);
  }
};

inline constexpr std::size_t kMaxEigenDim = 1024;

/// Cyclic Jacobi eigendecomposition.
///
/// Throws ParameterError for dim == 0 or dim > kMaxEigenDim, and
/// NumericalError if the off-diagonal mass has not vanished after the sweep
/// budget is spent.
Eigensystem eigendecompose(const SymmetricMatrix &matrix);

}  // namespace pfa
