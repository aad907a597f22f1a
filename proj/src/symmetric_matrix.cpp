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

#include "pfa/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pfa/error.hpp"

namespace pfa {

SymmetricMatrix::SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

namespace {

void check_index(std::size_t i, std::size_t j, std::size_t dim) {
  if (i >= dim || j >= dim) {
    throw ParameterError("SymmetricMatrix: index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range for dimension " + std::to_string(dim));
  }
}

}  // namespace

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  check_index(i, j, dim_);
  data_[i * dim_ + j] = value;
  data_[j * dim_ + i] = value;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double value) {
  check_index(i, j, dim_);
  data_[i * dim_ + j] += value;
  if (i != j) {
    data_[j * dim_ + i] += value;
  }
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    t += data_[i * dim_ + i];
  }
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) {
    s += x * x;
  }
  return std::sqrt(s);
}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double> &a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

Eigensystem eigendecompose(const SymmetricMatrix &matrix) {
  const std::size_t n = matrix.dim();
  if (n == 0 || n > kMaxEigenDim) {
    throw ParameterError("eigendecompose: dimension must be in [1, " + std::to_string(kMaxEigenDim) + "], got " +
                         std::to_string(n));
  }

  std::vector<double> a(matrix.data().begin(), matrix.data().end());
  if (!std::all_of(a.begin(), a.end(), [](double x) { return std::isfinite(x); })) {
    throw NumericalError("eigendecompose: matrix has non-finite entries");
  }
  // v is stored row-major with eigenvectors as columns while rotating.
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
  }

  const double scale = matrix.frobenius_norm();
  const double target = 1e-14 * scale;
  bool converged = scale == 0.0 || off_diagonal_norm(a, n) <= target;

  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) {
          continue;
        }
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Once an element is below the rounding level of both diagonal
        // entries it can be dropped without changing the spectrum.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        // Rutishauser's stable choice of the smaller rotation angle.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    converged = off_diagonal_norm(a, n) <= target;
  }
  if (!converged) {
    throw NumericalError("eigendecompose: Jacobi iteration did not converge within " + std::to_string(kMaxSweeps) +
                         " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  Eigensystem result;
  result.dim = n;
  result.values.resize(n);
  result.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t col = order[k];
    result.values[k] = a[col * n + col];
    for (std::size_t i = 0; i < n; ++i) {
      result.vectors[k * n + i] = v[i * n + col];
    }
  }
  return result;
}

}  // namespace pfa
