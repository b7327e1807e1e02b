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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qtsallis/channels.hpp"
#include "qtsallis/entropies.hpp"

namespace qtsallis {

/// Environment state after the channel acts: w_mn = tr(E_m rho E_n^dagger),
/// a density matrix of dimension equal to the Kraus count. Its nonzero
/// spectrum matches the joint reference/principal output state's.
struct WMatrix {
  HermitianOperator op;

  std::size_t dim() const { return op.dim(); }
};

inline WMatrix w_matrix(const DensityMatrix& rho, const KrausChannel& e) {
  if (rho.dim() != e.dim()) {
    throw std::invalid_argument("w_matrix: dimension mismatch");
  }
  const std::size_t m = e.size();
  const std::size_t d = e.dim();
  // Precompute E_m rho once; w_mn = tr((E_m rho) E_n^dagger).
  std::vector<ComplexMatrix> e_rho;
  e_rho.reserve(m);
  for (const auto& k : e.kraus()) e_rho.push_back(k * rho.matrix());

  ComplexMatrix w(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      cdouble t = 0.0;
      const ComplexMatrix& eb = e.kraus()[b];
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          t += e_rho[a](i, j) * std::conj(eb(i, j));
        }
      }
      w(a, b) = t;
      w(b, a) = std::conj(t);
    }
  }
  const HermitianOperator op(w);
  if (std::abs(op.matrix().trace() - cdouble(1.0, 0.0)) > tolerance.unit_trace) {
    throw std::logic_error("w_matrix: trace deviates from 1");
  }
  return WMatrix{op};
}

/// q-entropy exchange S_q(rho, E) = tr(eta_q(W)). The W route is the
/// default: W has Kraus-count dimension and is numerically cleaner than
/// the joint-output route, which is kept below for cross-checking.
inline double entropy_exchange(const DensityMatrix& rho, const KrausChannel& e,
                               QOrder q) {
  const WMatrix w = w_matrix(rho, e);
  EigenSystem eig = hermitian_eig(w.op);
  double s = 0.0;
  for (double lam : eig.values) s += eta_q(lam, q);
  return s;
}

/// Same functional through tr(eta_q(rho^{RQ'})) with rho^{RQ'} the joint
/// output of the canonical purification.
inline double entropy_exchange_via_joint(const DensityMatrix& rho,
                                         const KrausChannel& e, QOrder q) {
  return tsallis_entropy(joint_output(e, purify(rho)), q);
}

/// Entanglement fidelity F(rho, E) = sum_m |tr(rho E_m)|^2.
inline double entanglement_fidelity(const DensityMatrix& rho,
                                    const KrausChannel& e) {
  if (rho.dim() != e.dim()) {
    throw std::invalid_argument("entanglement_fidelity: dimension mismatch");
  }
  double f = 0.0;
  for (const auto& k : e.kraus()) {
    f += std::norm((rho.matrix() * k).trace());
  }
  return f;
}

/// Same functional as <psi| rho^{RQ'} |psi> over the canonical
/// purification; cross-check route.
inline double entanglement_fidelity_via_joint(const DensityMatrix& rho,
                                              const KrausChannel& e) {
  const PurifiedState psi = purify(rho);
  const DensityMatrix joint = joint_output(e, psi);
  return expectation(joint.matrix(), psi.vec).real();
}

/// Coherent q-information I_q(rho, E) = S_q(E(rho)) - S_q(rho, E).
inline double coherent_q_information(const DensityMatrix& rho,
                                     const KrausChannel& e, QOrder q) {
  return tsallis_entropy(apply(e, rho), q) - entropy_exchange(rho, e, q);
}

}  // namespace qtsallis
