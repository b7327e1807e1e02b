// Copyright 2026 The qtsallis developers
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

#include "qtsallis/qtsallis.hpp"

namespace qttest {

using namespace qtsallis;

inline ComplexMatrix pauli_x() {
  return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
}

inline ComplexMatrix pauli_y() {
  return ComplexMatrix{{0.0, cdouble(0.0, -1.0)}, {cdouble(0.0, 1.0), 0.0}};
}

inline ComplexMatrix pauli_z() {
  return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
}

inline DensityMatrix ket0_state() {
  return DensityMatrix(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
}

inline DensityMatrix ket1_state() {
  return DensityMatrix(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}});
}

inline DensityMatrix plus_state() {
  return DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
}

inline DensityMatrix maximally_mixed(std::size_t d) {
  return DensityMatrix((1.0 / static_cast<double>(d)) *
                       ComplexMatrix::identity(d));
}

inline ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const cdouble z =
          (i == j) ? cdouble(rng.normal(), 0.0) : 0.5 * rng.complex_normal();
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

/// Random Hermitian shifted to have strictly positive spectrum, for
/// functions only defined on (0, inf).
inline ComplexMatrix random_positive_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix m = random_hermitian(d, rng);
  m += (m.frobenius_norm() + 0.1) * ComplexMatrix::identity(d);
  return m;
}

}  // namespace qttest
