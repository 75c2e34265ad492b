// Copyright 2026 The choibasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "choibasis/choi.hpp"
#include "choibasis/linalg.hpp"

namespace choibasis {

/// Hermitian matrix with unit diagonal defining the Schur channel Y -> A . Y.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(ComplexMatrix a, double tol = kDefaultTolerance)
      : matrix_(std::move(a)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
      throw DimensionError("CorrelationMatrix: expected a non-empty square "
                           "matrix, got " + detail::shape_of(matrix_));
    }
    if (!all_finite(matrix_)) {
      throw ValidationError("CorrelationMatrix: non-finite entry");
    }
    if (!is_hermitian(matrix_, tol)) {
      throw ValidationError("CorrelationMatrix: not Hermitian");
    }
    for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
      if (std::abs(matrix_(i, i) - Complex(1.0, 0.0)) > tol) {
        throw ValidationError("CorrelationMatrix: diagonal entry " +
                              std::to_string(i) + " is not 1");
      }
    }
  }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Choi matrix of X -> U X U^dagger, computed as res(U) res(U)^dagger.
inline ChoiMatrix unitary_channel(const ComplexMatrix& u,
                                  double tol = kDefaultTolerance) {
  detail::require_square(u, "unitary_channel");
  if (u.size() == 0) throw DimensionError("unitary_channel: empty matrix");
  const auto d = u.rows();
  if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) > tol) {
    throw ValidationError("unitary_channel: U^dagger U differs from identity");
  }
  const int di = static_cast<int>(d);
  return choi_from_kraus(KrausSet(di, di, {u}));
}

struct SchurChannel {
  ChoiMatrix choi;
  /// Whether the correlation matrix was PSD at the requested tolerance.
  bool completely_positive;
  double min_eigenvalue;
};

/// Choi matrix of Y -> A . Y (entrywise product). Nonzero only at
/// (i*d + i, j*d + j) where it equals A[i,j]. Always trace preserving;
/// completely positive iff A is PSD, which is reported rather than enforced.
inline SchurChannel schur_channel(const CorrelationMatrix& a,
                                  double psd_tol = kDefaultTolerance) {
  const int d = a.dim();
  ComplexMatrix j = ComplexMatrix::Zero(d * d, d * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) j(r * d + r, c * d + c) = a.matrix()(r, c);
  }
  const double lambda_min = min_eigenvalue_hermitian(a.matrix());
  return {ChoiMatrix(d, d, std::move(j)), lambda_min >= -psd_tol, lambda_min};
}

/// Standard complex Gaussian samples (E|z|^2 = 1) from a seeded
/// std::mt19937_64. Uniforms are the top 53 bits of each draw and normals
/// come from Box-Muller, so the stream does not depend on the standard
/// library's distribution implementations.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1].
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  Complex complex_normal() {
    const double radius = std::sqrt(-std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  ComplexMatrix matrix(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_normal();
    }
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

/// Isometry spanning the columns of a full-column-rank matrix: Q of its QR
/// factorization, with column phases chosen so R has a positive real
/// diagonal. That makes the result unique.
inline ComplexMatrix orthonormalize_columns(const ComplexMatrix& g) {
  if (g.rows() < g.cols()) {
    throw DimensionError("orthonormalize_columns: more columns than rows");
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q =
      qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
  const auto& packed = qr.matrixQR();
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    const Complex r = packed(j, j);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(j) *= r / mag;
  }
  return q;
}

/// Kraus operators of a random channel: blocks of a random isometry
/// V ((rank*dy) x dx, V^dagger V = I).
inline KrausSet random_kraus(int dx, int dy, int kraus_rank,
                             std::uint64_t seed) {
  if (dx < 1 || dy < 1) {
    throw DomainError("random_channel: dimensions must be >= 1");
  }
  if (kraus_rank < 1 || kraus_rank > dx * dy) {
    throw DomainError("random_channel: kraus_rank must be in [1, " +
                      std::to_string(dx * dy) + "], got " +
                      std::to_string(kraus_rank));
  }
  if (static_cast<long long>(kraus_rank) * dy < dx) {
    throw DomainError("random_channel: kraus_rank*dy must be >= dx for a "
                      "trace-preserving channel, got rank " +
                      std::to_string(kraus_rank) + " with dx=" +
                      std::to_string(dx) + " dy=" + std::to_string(dy));
  }
  GaussianStream stream(seed);
  const ComplexMatrix v = orthonormalize_columns(
      stream.matrix(static_cast<Eigen::Index>(kraus_rank) * dy, dx));
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(kraus_rank));
  for (int m = 0; m < kraus_rank; ++m) ops.push_back(v.block(m * dy, 0, dy, dx));
  return KrausSet(dx, dy, std::move(ops));
}

/// Deterministic in seed; CP and TP by construction.
inline ChoiMatrix random_channel(int dx, int dy, int kraus_rank,
                                 std::uint64_t seed) {
  return choi_from_kraus(random_kraus(dx, dy, kraus_rank, seed));
}

}  // namespace choibasis
