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
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "choibasis/errors.hpp"

namespace choibasis {

using Complex = std::complex<double>;

/// Dense complex matrix; the carrier for operators, Choi matrices and basis
/// elements.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Max-abs-entry tolerance for Hermiticity checks.
inline constexpr double kHermiticityTolerance = 1e-10;

namespace detail {

inline std::string shape_of(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         shape_of(m));
  }
}

}  // namespace detail

/// Largest absolute entry; zero for an empty matrix.
inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

/// Square and max|M - M^dagger| <= tol.
inline bool is_hermitian(const ComplexMatrix& m,
                         double tol = kHermiticityTolerance) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

/// Hilbert-Schmidt inner product trace(A^dagger B). Conjugate-linear in the
/// first argument.
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch " + detail::shape_of(a) +
                         " vs " + detail::shape_of(b));
  }
  return (a.conjugate().cwiseProduct(b)).sum();
}

/// Kronecker product; (A (x) B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l].
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Traces out the first tensor factor of a matrix on C^dim_first (x)
/// C^dim_second.
inline ComplexMatrix partial_trace_first(const ComplexMatrix& m,
                                         Eigen::Index dim_first,
                                         Eigen::Index dim_second) {
  const Eigen::Index side = dim_first * dim_second;
  if (dim_first < 1 || dim_second < 1 || m.rows() != side ||
      m.cols() != side) {
    throw DimensionError("partial_trace_first: matrix " + detail::shape_of(m) +
                         " does not have side " + std::to_string(dim_first) +
                         "*" + std::to_string(dim_second));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_second, dim_second);
  for (Eigen::Index k = 0; k < dim_first; ++k) {
    out += m.block(k * dim_second, k * dim_second, dim_second, dim_second);
  }
  return out;
}

/// Traces out the second tensor factor.
inline ComplexMatrix partial_trace_second(const ComplexMatrix& m,
                                          Eigen::Index dim_first,
                                          Eigen::Index dim_second) {
  const Eigen::Index side = dim_first * dim_second;
  if (dim_first < 1 || dim_second < 1 || m.rows() != side ||
      m.cols() != side) {
    throw DimensionError("partial_trace_second: matrix " +
                         detail::shape_of(m) + " does not have side " +
                         std::to_string(dim_first) + "*" +
                         std::to_string(dim_second));
  }
  ComplexMatrix out(dim_first, dim_first);
  for (Eigen::Index i = 0; i < dim_first; ++i) {
    for (Eigen::Index j = 0; j < dim_first; ++j) {
      out(i, j) = m.block(i * dim_second, j * dim_second, dim_second,
                          dim_second)
                      .trace();
    }
  }
  return out;
}

/// Sum of singular values.
inline double trace_norm(const ComplexMatrix& m) {
  detail::require_square(m, "trace_norm");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

/// Row-major vectorization as a column: res(A)[i*cols + j] = A[i,j].
/// res(U) res(U)^dagger is the Choi matrix of X -> U X U^dagger.
inline ComplexVector res(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  }
  return v;
}

/// Inverse of res for a rows x cols target.
inline ComplexMatrix unres(const ComplexVector& v, Eigen::Index rows,
                           Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("unres: vector length " + std::to_string(v.size()) +
                         " does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  ComplexMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  }
  return a;
}

/// Eigenvalues of the Hermitian part (M + M^dagger)/2, ascending.
inline RealVector eigenvalues_hermitian(const ComplexMatrix& m) {
  detail::require_square(m, "eigenvalues_hermitian");
  const ComplexMatrix herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double min_eigenvalue_hermitian(const ComplexMatrix& m) {
  detail::require_square(m, "min_eigenvalue_hermitian");
  if (m.size() == 0) throw DimensionError("min_eigenvalue_hermitian: empty");
  return eigenvalues_hermitian(m).minCoeff();
}

}  // namespace choibasis
