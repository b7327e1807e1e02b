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

namespace qtsallis {

/// Every numerical threshold used by the library, in one place.
/// Constructors repair deviations up to the *_accept values and reject
/// anything past the *_reject values.
struct Tolerances {
  // Hermiticity: ||A - A^dagger||_max accepted after symmetrization,
  // and the asymmetry past which constructors reject the input.
  double hermiticity_accept = 1e-10;
  double hermiticity_reject = 1e-8;

  // Jacobi eigensolver: stop once the off-diagonal Frobenius norm is
  // below eig_offdiag; give up after eig_max_sweeps full sweeps.
  double eig_offdiag = 1e-12;
  int eig_max_sweeps = 100;
  double eig_reconstruct = 1e-9;
  double orthonormality = 1e-10;

  // Spectra: eigenvalues inside [-zero_eigenvalue, zero_eigenvalue] are
  // exact zeros for support tests and fractional powers; eigenvalues
  // below -eigenvalue_reject mark an invalid state.
  double zero_eigenvalue = 1e-10;
  double eigenvalue_reject = 1e-8;

  // Traces and probability normalization.
  double trace_reject = 1e-8;
  double unit_trace = 1e-9;
  double probability_sum = 1e-12;

  // Kraus completeness ||sum E^dagger E - I||_max.
  double completeness_reject = 1e-8;

  // Mass of rho on ker(sigma) past which D_q(rho||sigma) is +infinity
  // for q >= 1.
  double support_mass = 1e-8;

  // |q - 1| below which the natural-log formulas take over.
  double q_one_crossover = 1e-9;

  // Default slack for inequality verifiers and cross-checks.
  double check = 1e-9;
  double closed_form = 1e-10;
};

inline constexpr Tolerances tolerance{};

}  // namespace qtsallis
