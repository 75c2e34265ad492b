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

#include <string>
#include <utility>
#include <vector>

#include "choibasis/linalg.hpp"

namespace choibasis {

/// Default tolerance of the CP/TP/HP predicates.
inline constexpr double kDefaultTolerance = 1e-10;

/// Choi matrix J(Phi) = sum_{i,j} Phi(|i><j|) (x) |i><j| of a linear map
/// from L(C^dx) to L(C^dy). The output space Y is the first tensor factor,
/// so the matrix has side dy*dx with row index y*dx + x.
class ChoiMatrix {
 public:
  ChoiMatrix(int dx, int dy, ComplexMatrix matrix)
      : dx_(dx), dy_(dy), matrix_(std::move(matrix)) {
    if (dx < 1 || dy < 1) {
      throw DomainError("ChoiMatrix: dimensions must be >= 1, got dx=" +
                        std::to_string(dx) + " dy=" + std::to_string(dy));
    }
    const Eigen::Index side = static_cast<Eigen::Index>(dx) * dy;
    if (matrix_.rows() != side || matrix_.cols() != side) {
      throw DimensionError("ChoiMatrix: matrix " + detail::shape_of(matrix_) +
                           " does not have side dy*dx = " +
                           std::to_string(side));
    }
    if (!all_finite(matrix_)) {
      throw ValidationError("ChoiMatrix: non-finite entry");
    }
  }

  int dx() const { return dx_; }
  int dy() const { return dy_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  int dx_;
  int dy_;
  ComplexMatrix matrix_;
};

/// Kraus operators of Phi(X) = sum_m K_m X K_m^dagger, each dy x dx.
class KrausSet {
 public:
  KrausSet(int dx, int dy, std::vector<ComplexMatrix> operators)
      : dx_(dx), dy_(dy), operators_(std::move(operators)) {
    if (dx < 1 || dy < 1) {
      throw DomainError("KrausSet: dimensions must be >= 1");
    }
    if (operators_.empty()) {
      throw DimensionError("KrausSet: at least one operator is required");
    }
    for (const auto& k : operators_) {
      if (k.rows() != dy || k.cols() != dx) {
        throw DimensionError("KrausSet: operator " + detail::shape_of(k) +
                             " is not dy x dx = " + std::to_string(dy) + "x" +
                             std::to_string(dx));
      }
      if (!all_finite(k)) throw ValidationError("KrausSet: non-finite entry");
    }
  }

  int dx() const { return dx_; }
  int dy() const { return dy_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

  /// Image of X under the map defined by this set.
  ComplexMatrix apply(const ComplexMatrix& x) const {
    if (x.rows() != dx_ || x.cols() != dx_) {
      throw DimensionError("KrausSet::apply: input " + detail::shape_of(x) +
                           " is not dx x dx");
    }
    ComplexMatrix out = ComplexMatrix::Zero(dy_, dy_);
    for (const auto& k : operators_) out += k * x * k.adjoint();
    return out;
  }

 private:
  int dx_;
  int dy_;
  std::vector<ComplexMatrix> operators_;
};

/// sum_m res(K_m) res(K_m)^dagger. Always positive semidefinite.
inline ChoiMatrix choi_from_kraus(const KrausSet& kraus) {
  const Eigen::Index side = static_cast<Eigen::Index>(kraus.dx()) * kraus.dy();
  ComplexMatrix j = ComplexMatrix::Zero(side, side);
  for (const auto& k : kraus.operators()) {
    const ComplexVector v = res(k);
    j.noalias() += v * v.adjoint();
  }
  return ChoiMatrix(kraus.dx(), kraus.dy(), std::move(j));
}

/// Phi(X) = Tr_X[ J (I_Y (x) X^T) ].
inline ComplexMatrix apply_channel(const ChoiMatrix& choi,
                                   const ComplexMatrix& x) {
  const int dx = choi.dx();
  const int dy = choi.dy();
  if (x.rows() != dx || x.cols() != dx) {
    throw DimensionError("apply_channel: input " + detail::shape_of(x) +
                         " is not " + std::to_string(dx) + "x" +
                         std::to_string(dx));
  }
  const ComplexMatrix& j = choi.matrix();
  ComplexMatrix out(dy, dy);
  for (int y = 0; y < dy; ++y) {
    for (int yp = 0; yp < dy; ++yp) {
      out(y, yp) = j.block(y * dx, yp * dx, dx, dx).cwiseProduct(x).sum();
    }
  }
  return out;
}

inline bool is_hermiticity_preserving(const ChoiMatrix& choi,
                                      double tol = kDefaultTolerance) {
  return is_hermitian(choi.matrix(), tol);
}

/// J Hermitian within tol and its smallest eigenvalue >= -tol.
inline bool is_completely_positive(const ChoiMatrix& choi,
                                   double tol = kDefaultTolerance) {
  if (!is_hermitian(choi.matrix(), tol)) return false;
  return min_eigenvalue_hermitian(choi.matrix()) >= -tol;
}

/// Tr_Y J = I_X within tol (max-abs entry).
inline bool is_trace_preserving(const ChoiMatrix& choi,
                                double tol = kDefaultTolerance) {
  const ComplexMatrix reduced =
      partial_trace_first(choi.matrix(), choi.dy(), choi.dx());
  return max_abs(reduced - ComplexMatrix::Identity(choi.dx(), choi.dx())) <=
         tol;
}

}  // namespace choibasis
