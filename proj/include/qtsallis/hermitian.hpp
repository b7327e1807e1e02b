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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qtsallis/complex_matrix.hpp"
#include "qtsallis/tolerances.hpp"

namespace qtsallis {

/// Square complex matrix kept Hermitian by construction: inputs are
/// symmetrized to (A + A^dagger)/2 and rejected if the asymmetry exceeds
/// `max_asymmetry`.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m,
                             double max_asymmetry = tolerance.hermiticity_reject)
      : dim_(m.rows()), mat_(m.rows(), m.cols()) {
    if (!m.is_square()) {
      throw std::invalid_argument("HermitianOperator: matrix must be square");
    }
    if (!m.all_finite()) {
      throw std::invalid_argument("HermitianOperator: non-finite entries");
    }
    double asym = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
      }
    }
    if (asym > max_asymmetry) {
      throw std::invalid_argument("HermitianOperator: input is not Hermitian");
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        mat_(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      }
    }
  }

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return mat_; }

 private:
  std::size_t dim_;
  ComplexMatrix mat_;
};

/// Spectral decomposition: `values` ascending, columns of `vectors` the
/// matching orthonormal eigenvectors, each phase-fixed so its
/// largest-magnitude component is real positive (lowest index on ties).
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

namespace detail {

inline double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t d = a.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One complex Givens rotation zeroing a(p,q). The unitary is
//   J[p][p] = c, J[p][q] = s e^{i phi}, J[q][p] = -s e^{-i phi}, J[q][q] = c
// with phi = arg a(p,q), applied as A <- J^dagger A J, V <- V J.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                          std::size_t q) {
  const cdouble apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cdouble phase = apq / r;

  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double tau = (beta - alpha) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(tau * tau + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cdouble se_pos = s * phase;             // s e^{i phi}
  const cdouble se_neg = s * std::conj(phase);  // s e^{-i phi}
  const std::size_t d = a.rows();

  // Rows: A <- J^dagger A.
  for (std::size_t j = 0; j < d; ++j) {
    const cdouble apj = a(p, j);
    const cdouble aqj = a(q, j);
    a(p, j) = c * apj - se_pos * aqj;
    a(q, j) = se_neg * apj + c * aqj;
  }
  // Columns: A <- A J.
  for (std::size_t i = 0; i < d; ++i) {
    const cdouble aip = a(i, p);
    const cdouble aiq = a(i, q);
    a(i, p) = c * aip - se_neg * aiq;
    a(i, q) = se_pos * aip + c * aiq;
  }
  // Pin the analytically known entries; rounding otherwise leaves dust.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cdouble(a(p, p).real(), 0.0);
  a(q, q) = cdouble(a(q, q).real(), 0.0);

  for (std::size_t i = 0; i < d; ++i) {
    const cdouble vip = v(i, p);
    const cdouble viq = v(i, q);
    v(i, p) = c * vip - se_neg * viq;
    v(i, q) = se_pos * vip + c * viq;
  }
}

inline void fix_column_phase(ComplexMatrix& v, std::size_t col) {
  const std::size_t d = v.rows();
  std::size_t imax = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double m = std::abs(v(i, col));
    if (m > best) {  // strict: lowest index wins ties
      best = m;
      imax = i;
    }
  }
  if (best <= 0.0) return;
  const cdouble phase = std::conj(v(imax, col)) / best;
  for (std::size_t i = 0; i < d; ++i) v(i, col) *= phase;
}

}  // namespace detail

/// Cyclic complex Jacobi. Robust at the dimensions this library targets;
/// throws if the off-diagonal mass has not dropped below
/// tolerance.eig_offdiag within tolerance.eig_max_sweeps sweeps.
inline EigenSystem hermitian_eig(const HermitianOperator& h) {
  const std::size_t d = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(d);

  if (d > 1) {
    // Below this, finishing the sweep already implies convergence.
    const double pivot_skip =
        tolerance.eig_offdiag / std::sqrt(static_cast<double>(d * (d - 1)));
    int sweep = 0;
    while (detail::offdiag_norm(a) > tolerance.eig_offdiag) {
      if (++sweep > tolerance.eig_max_sweeps) {
        throw std::runtime_error("hermitian_eig: no convergence (ill-conditioned input?)");
      }
      for (std::size_t p = 0; p + 1 < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
          if (std::abs(a(p, q)) > pivot_skip) detail::jacobi_rotate(a, v, p, q);
        }
      }
    }
  }

  EigenSystem eig;
  eig.values.resize(d);
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  eig.vectors = ComplexMatrix(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    eig.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < d; ++i) eig.vectors(i, k) = v(i, order[k]);
    detail::fix_column_phase(eig.vectors, k);
  }
  return eig;
}

/// Rebuild V diag(f(lambda)) V^dagger. `f` must be finite on the whole
/// spectrum; a non-finite value or an exception from `f` aborts the call.
template <class F>
HermitianOperator matrix_function(const HermitianOperator& h, F&& f) {
  const EigenSystem eig = hermitian_eig(h);
  const std::size_t d = h.dim();
  ComplexMatrix out(d, d);
  std::vector<double> fx(d);
  for (std::size_t k = 0; k < d; ++k) {
    fx[k] = f(eig.values[k]);
    if (!std::isfinite(fx[k])) {
      throw std::domain_error("matrix_function: f not finite on the spectrum");
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (fx[k] == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const cdouble vik = eig.vectors(i, k);
      for (std::size_t j = 0; j < d; ++j) {
        out(i, j) += fx[k] * vik * std::conj(eig.vectors(j, k));
      }
    }
  }
  return HermitianOperator(out);
}

/// Schatten 1-norm. Hermitian inputs take the exact |eigenvalue| route;
/// anything else goes through the singular values of A^dagger A.
inline double trace_norm(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("trace_norm: matrix must be square");
  }
  double asym = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  if (asym <= tolerance.hermiticity_accept) {
    const EigenSystem eig = hermitian_eig(HermitianOperator(a, asym + 1e-30));
    double s = 0.0;
    for (double x : eig.values) s += std::abs(x);
    return s;
  }
  const EigenSystem eig = hermitian_eig(HermitianOperator(a.dagger() * a));
  double s = 0.0;
  for (double x : eig.values) s += std::sqrt(std::max(x, 0.0));
  return s;
}

/// Positive/negative eigenspace projectors of a Hermitian difference.
/// Zero eigenvalues (within tolerance.zero_eigenvalue) belong to
/// proj_plus so the split is deterministic; t is the positive mass,
/// equal to half the trace norm when the difference is traceless.
struct JordanSplit {
  HermitianOperator proj_plus;
  HermitianOperator proj_minus;
  double t;
};

inline JordanSplit jordan_split(const HermitianOperator& a,
                                const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("jordan_split: dimension mismatch");
  }
  const std::size_t d = a.dim();
  const HermitianOperator diff(a.matrix() - b.matrix());
  const EigenSystem eig = hermitian_eig(diff);

  ComplexMatrix plus(d, d);
  ComplexMatrix minus(d, d);
  double t = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix& target =
        (eig.values[k] >= -tolerance.zero_eigenvalue) ? plus : minus;
    for (std::size_t i = 0; i < d; ++i) {
      const cdouble vik = eig.vectors(i, k);
      for (std::size_t j = 0; j < d; ++j) {
        target(i, j) += vik * std::conj(eig.vectors(j, k));
      }
    }
    if (eig.values[k] > 0.0) t += eig.values[k];
  }
  return JordanSplit{HermitianOperator(plus), HermitianOperator(minus), t};
}

}  // namespace qtsallis
