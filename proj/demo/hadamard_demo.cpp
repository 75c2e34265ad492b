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

// Builds the Choi matrix of the Hadamard conjugation, represents it in the
// channel subspace basis, recovers it and prints the trace-norm error.

#include <cmath>
#include <iostream>

#include "choibasis/choibasis.hpp"

int main() {
  using namespace choibasis;

  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);

  const ChoiMatrix j = unitary_channel(h);
  std::cout << "J =\n" << j.matrix().real() << "\n\n";

  for (const auto layout : {BasisLayout::product, BasisLayout::matrix_unit}) {
    const ChannelBasis basis = channel_basis(2, 2, layout);
    const CoefficientVector v = represent(basis, j);
    std::cout << to_string(layout) << " layout, " << v.size()
              << " coefficients:\n"
              << v.values().transpose() << "\n";
    const ChoiMatrix recovered = combine(basis, v);
    std::cout << "trace-norm error: "
              << trace_norm(j.matrix() - recovered.matrix()) << "\n\n";
  }
}
