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
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "choibasis/choi.hpp"
#include "choibasis/hermitian_basis.hpp"
#include "choibasis/linalg.hpp"

namespace choibasis {

/// Trace-norm bound on the part of a Choi matrix left over after projecting
/// onto the channel subspace.
inline constexpr double kMembershipTolerance = 1e-8;

/// dx^2 dy^2 - dx^2 + 1: dimension of the smallest real subspace of
/// Herm(C^dy (x) C^dx) containing every channel Choi matrix.
inline long long subspace_dimension(int dx, int dy) {
  if (dx < 1 || dy < 1) {
    throw DomainError("subspace_dimension: dimensions must be >= 1, got dx=" +
                      std::to_string(dx) + " dy=" + std::to_string(dy));
  }
  const long long x2 = static_cast<long long>(dx) * dx;
  const long long y2 = static_cast<long long>(dy) * dy;
  return x2 * y2 - x2 + 1;
}

/// How the orthonormal basis of the channel subspace is laid out. Both span
/// the same subspace and share element 0.
enum class BasisLayout {
  /// {I_Y (x) I_X / sqrt(dx dy)} u {G (x) H : G in B(Y) without its identity,
  /// H in B(X)}, with B the canonical Hermitian basis.
  product,
  /// Layout of the reference Julia implementation: traceless diagonal G of
  /// B(Y) tensored with an X basis whose diagonal part is the projectors
  /// |b><b|, followed by Hermitian combinations of the matrix units
  /// |a><c| (x) |b><d| for a < c.
  matrix_unit,
};

inline std::string to_string(BasisLayout layout) {
  return layout == BasisLayout::product ? "product" : "matrix-unit";
}

struct ChannelLabel {
  enum class Kind { identity_pair, pair, unit_sym, unit_antisym };

  Kind kind = Kind::identity_pair;
  // pair: index into B(Y) (never 0) and into the X factor basis.
  int g = 0;
  int h = 0;
  // unit_sym / unit_antisym: (|a><c| (x) |b><d| +- h.c.), a < c.
  int a = 0;
  int c = 0;
  int b = 0;
  int d = 0;

  std::string describe() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::identity_pair:
        os << "identity-pair";
        break;
      case Kind::pair:
        os << "pair " << g << " " << h;
        break;
      case Kind::unit_sym:
        os << "unit-sym " << a << " " << c << " " << b << " " << d;
        break;
      case Kind::unit_antisym:
        os << "unit-antisym " << a << " " << c << " " << b << " " << d;
        break;
    }
    return os.str();
  }

  friend bool operator==(const ChannelLabel&, const ChannelLabel&) = default;
};

/// Orthonormal basis of the channel subspace S, materialized eagerly.
struct ChannelBasis {
  int dx = 0;
  int dy = 0;
  BasisLayout layout = BasisLayout::product;
  std::vector<ComplexMatrix> elements;
  std::vector<ChannelLabel> labels;

  std::size_t size() const { return elements.size(); }
  const ComplexMatrix& operator[](std::size_t k) const { return elements[k]; }
};

/// Real coordinates of a Choi matrix in a ChannelBasis.
class CoefficientVector {
 public:
  CoefficientVector(int dx, int dy, RealVector values)
      : dx_(dx), dy_(dy), values_(std::move(values)) {
    const long long expected = subspace_dimension(dx, dy);
    if (values_.size() != expected) {
      throw DimensionError("CoefficientVector: length " +
                           std::to_string(values_.size()) + " but dx=" +
                           std::to_string(dx) + " dy=" + std::to_string(dy) +
                           " requires " + std::to_string(expected));
    }
    if (!values_.allFinite()) {
      throw ValidationError("CoefficientVector: non-finite entry");
    }
  }

  int dx() const { return dx_; }
  int dy() const { return dy_; }
  const RealVector& values() const { return values_; }
  Eigen::Index size() const { return values_.size(); }
  double operator[](Eigen::Index k) const { return values_(k); }

 private:
  int dx_;
  int dy_;
  RealVector values_;
};

namespace detail {

/// X factor used by the matrix-unit layout: projectors |b><b| followed by
/// the off-diagonal elements of the canonical basis.
inline std::vector<ComplexMatrix> projector_hermitian_basis(int d) {
  const HermitianBasis canonical = hermitian_basis(d);
  std::vector<ComplexMatrix> out;
  out.reserve(canonical.size());
  for (int b = 0; b < d; ++b) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(b, b) = 1.0;
    out.push_back(std::move(p));
  }
  for (std::size_t k = static_cast<std::size_t>(d); k < canonical.size(); ++k) {
    out.push_back(canonical[k]);
  }
  return out;
}

}  // namespace detail

inline ChannelBasis channel_basis(int dx, int dy,
                                  BasisLayout layout = BasisLayout::product) {
  const long long count = subspace_dimension(dx, dy);
  using Kind = ChannelLabel::Kind;
  const int side = dx * dy;

  ChannelBasis basis;
  basis.dx = dx;
  basis.dy = dy;
  basis.layout = layout;
  basis.elements.reserve(static_cast<std::size_t>(count));
  basis.labels.reserve(static_cast<std::size_t>(count));

  basis.elements.push_back(ComplexMatrix::Identity(side, side) /
                           std::sqrt(static_cast<double>(side)));
  basis.labels.push_back({});

  const HermitianBasis by = hermitian_basis(dy);

  if (layout == BasisLayout::product) {
    const HermitianBasis bx = hermitian_basis(dx);
    for (std::size_t g = 1; g < by.size(); ++g) {
      for (std::size_t h = 0; h < bx.size(); ++h) {
        basis.elements.push_back(kron(by[g], bx[h]));
        basis.labels.push_back({Kind::pair, static_cast<int>(g),
                                static_cast<int>(h)});
      }
    }
    return basis;
  }

  const std::vector<ComplexMatrix> bx = detail::projector_hermitian_basis(dx);
  for (int g = 1; g < dy; ++g) {
    for (std::size_t h = 0; h < bx.size(); ++h) {
      basis.elements.push_back(kron(by[static_cast<std::size_t>(g)], bx[h]));
      basis.labels.push_back({Kind::pair, g, static_cast<int>(h)});
    }
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  for (int a = 0; a < dy; ++a) {
    for (int c = a + 1; c < dy; ++c) {
      for (int b = 0; b < dx; ++b) {
        for (int d = 0; d < dx; ++d) {
          const int row = a * dx + b;
          const int col = c * dx + d;
          ComplexMatrix sym = ComplexMatrix::Zero(side, side);
          sym(row, col) = inv_sqrt2;
          sym(col, row) = inv_sqrt2;
          basis.elements.push_back(std::move(sym));
          basis.labels.push_back({Kind::unit_sym, 0, 0, a, c, b, d});

          ComplexMatrix anti = ComplexMatrix::Zero(side, side);
          anti(row, col) = i_unit * inv_sqrt2;
          anti(col, row) = -i_unit * inv_sqrt2;
          basis.elements.push_back(std::move(anti));
          basis.labels.push_back({Kind::unit_antisym, 0, 0, a, c, b, d});
        }
      }
    }
  }
  return basis;
}

/// Basis of the orthogonal complement of S inside Herm(C^dy (x) C^dx):
/// (I_Y / sqrt(dy)) (x) H for every traceless H of the canonical B(X).
/// Empty when dx = 1.
inline std::vector<ComplexMatrix> sperp_basis(int dx, int dy) {
  if (dx < 1 || dy < 1) {
    throw DomainError("sperp_basis: dimensions must be >= 1");
  }
  const HermitianBasis bx = hermitian_basis(dx);
  const ComplexMatrix id_y =
      ComplexMatrix::Identity(dy, dy) / std::sqrt(static_cast<double>(dy));
  std::vector<ComplexMatrix> out;
  out.reserve(bx.size() - 1);
  for (std::size_t h = 1; h < bx.size(); ++h) out.push_back(kron(id_y, bx[h]));
  return out;
}

/// sum_k v[k] basis[k], with no projection.
inline ChoiMatrix combine(const ChannelBasis& basis,
                          const CoefficientVector& v) {
  if (v.dx() != basis.dx || v.dy() != basis.dy ||
      static_cast<std::size_t>(v.size()) != basis.size()) {
    throw DimensionError("combine: vector for dx=" + std::to_string(v.dx()) +
                         " dy=" + std::to_string(v.dy()) +
                         " does not match basis dx=" +
                         std::to_string(basis.dx) +
                         " dy=" + std::to_string(basis.dy));
  }
  const int side = basis.dx * basis.dy;
  ComplexMatrix out = ComplexMatrix::Zero(side, side);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double coeff = v[static_cast<Eigen::Index>(k)];
    if (coeff != 0.0) out += coeff * basis[k];
  }
  return ChoiMatrix(basis.dx, basis.dy, std::move(out));
}

/// Coordinates Re<B_k, J> of a Hermitian Choi matrix.
///
/// Throws ValidationError for non-Hermitian input and NotInSubspaceError when
/// trace_norm(J - combine(basis, v)) exceeds membership_tol, which happens
/// exactly when Tr_Y J is not a multiple of I_X.
inline CoefficientVector represent(
    const ChannelBasis& basis, const ChoiMatrix& choi,
    double membership_tol = kMembershipTolerance) {
  if (choi.dx() != basis.dx || choi.dy() != basis.dy) {
    throw DimensionError("represent: Choi matrix dx=" +
                         std::to_string(choi.dx()) + " dy=" +
                         std::to_string(choi.dy()) + " vs basis dx=" +
                         std::to_string(basis.dx) +
                         " dy=" + std::to_string(basis.dy));
  }
  const ComplexMatrix& j = choi.matrix();
  if (!is_hermitian(j, kHermiticityTolerance)) {
    throw ValidationError("represent: Choi matrix is not Hermitian (max |J - J^dagger| = " +
                          std::to_string(max_abs(j - j.adjoint())) + ")");
  }
  RealVector values(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Complex z = hs_inner(basis[k], j);
    if (std::abs(z.imag()) > kHermiticityTolerance) {
      throw ValidationError("represent: coefficient " + std::to_string(k) +
                            " has imaginary part " + std::to_string(z.imag()));
    }
    values(static_cast<Eigen::Index>(k)) = z.real();
  }
  CoefficientVector v(basis.dx, basis.dy, std::move(values));
  const double residual = trace_norm(j - combine(basis, v).matrix());
  if (!(residual <= membership_tol)) {
    std::ostringstream os;
    os << "represent: Choi matrix is not in the channel subspace "
          "(residual trace norm "
       << residual << " > " << membership_tol << ")";
    throw NotInSubspaceError(os.str(), residual);
  }
  return v;
}

/// <E, J> with E = I/dx; equals 1 for every channel.
inline double order_unit_pairing(const ChoiMatrix& choi) {
  if (!is_hermitian(choi.matrix(), kHermiticityTolerance)) {
    throw ValidationError("order_unit_pairing: Choi matrix is not Hermitian");
  }
  return choi.matrix().trace().real() / choi.dx();
}

}  // namespace choibasis
