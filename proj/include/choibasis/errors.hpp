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

#include <stdexcept>
#include <string>

namespace choibasis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or declared dimensions are inconsistent.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An integer parameter is outside its admissible range (d < 1, rank > dx*dy, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural requirement (non-unitary, non-Hermitian,
/// non-unit diagonal, non-finite entries).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A Choi matrix has a component outside the channel subspace, i.e. its
/// partial trace over the output is not a multiple of the identity.
class NotInSubspaceError : public Error {
 public:
  NotInSubspaceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  /// Trace norm of the part of the input not captured by the basis.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace choibasis
