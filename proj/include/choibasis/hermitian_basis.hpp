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
#include <string>
#include <vector>

#include "choibasis/linalg.hpp"

namespace choibasis {

/// Which member of the canonical Hermitian basis an element is. Indices are
/// 0-based: Diagonal k is built from |0>..|k-1> against |k>, Sym/Antisym a b
/// have a < b.
struct HermitianLabel {
  enum class Kind { identity, diagonal, sym, antisym };

  Kind kind = Kind::identity;
  int a = 0;
  int b = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::identity:
        return "identity";
      case Kind::diagonal:
        return "diagonal " + std::to_string(a);
      case Kind::sym:
        return "sym " + std::to_string(a) + " " + std::to_string(b);
      case Kind::antisym:
        return "antisym " + std::to_string(a) + " " + std::to_string(b);
    }
    return {};
  }

  friend bool operator==(const HermitianLabel&, const HermitianLabel&) = default;
};

/// Orthonormal basis of Herm(C^d) under the Hilbert-Schmidt inner product.
///
/// Canonical order: I/sqrt(d); the d-1 traceless diagonals
/// (sum_{a<k}|a><a| - k|k><k|)/sqrt(k+k^2) for k = 1..d-1; then for each
/// pair a < b in lexicographic order (|a><b|+|b><a|)/sqrt(2) followed by
/// (i|a><b| - i|b><a|)/sqrt(2).
struct HermitianBasis {
  int dim = 0;
  std::vector<ComplexMatrix> elements;
  std::vector<HermitianLabel> labels;

  std::size_t size() const { return elements.size(); }
  const ComplexMatrix& operator[](std::size_t k) const { return elements[k]; }
};

inline HermitianBasis hermitian_basis(int d) {
  if (d < 1) {
    throw DomainError("hermitian_basis: dimension must be >= 1, got " +
                      std::to_string(d));
  }
  using Kind = HermitianLabel::Kind;
  HermitianBasis basis;
  basis.dim = d;
  basis.elements.reserve(static_cast<std::size_t>(d) * d);
  basis.labels.reserve(static_cast<std::size_t>(d) * d);

  basis.elements.push_back(ComplexMatrix::Identity(d, d) /
                           std::sqrt(static_cast<double>(d)));
  basis.labels.push_back({Kind::identity, 0, 0});

  for (int k = 1; k < d; ++k) {
    const double norm = std::sqrt(static_cast<double>(k + k * k));
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < k; ++a) m(a, a) = 1.0 / norm;
    m(k, k) = -static_cast<double>(k) / norm;
    basis.elements.push_back(std::move(m));
    basis.labels.push_back({Kind::diagonal, k, 0});
  }

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(a, b) = inv_sqrt2;
      sym(b, a) = inv_sqrt2;
      basis.elements.push_back(std::move(sym));
      basis.labels.push_back({Kind::sym, a, b});

      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(a, b) = i_unit * inv_sqrt2;
      anti(b, a) = -i_unit * inv_sqrt2;
      basis.elements.push_back(std::move(anti));
      basis.labels.push_back({Kind::antisym, a, b});
    }
  }
  return basis;
}

}  // namespace choibasis
