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

#include "qtsallis/hermitian.hpp"
#include "qtsallis/random.hpp"
#include "qtsallis/tolerances.hpp"

namespace qtsallis {

/// Finite probability distribution: entries nonnegative, sum 1 within
/// tolerance.probability_sum. Stored as given (no renormalization).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs)
      : probs_(std::move(probs)) {
    if (probs_.empty()) {
      throw std::invalid_argument("ProbabilityVector: empty");
    }
    double sum = 0.0;
    for (double p : probs_) {
      if (!std::isfinite(p) || p < -tolerance.probability_sum) {
        throw std::invalid_argument("ProbabilityVector: negative entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tolerance.probability_sum) {
      throw std::invalid_argument("ProbabilityVector: entries do not sum to 1");
    }
    for (double& p : probs_) p = std::max(p, 0.0);
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

inline ProbabilityVector uniform_distribution(std::size_t n) {
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

/// Random point of the n-simplex; `uniform_weight` mixes toward the
/// uniform distribution, bounding entries away from zero.
inline ProbabilityVector random_distribution(std::size_t n, Rng& rng,
                                             double uniform_weight = 0.0) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& x : p) {
    x = -std::log(std::max(rng.uniform(), 0x1.0p-53));
    sum += x;
  }
  for (double& x : p) {
    x = (1.0 - uniform_weight) * x / sum +
        uniform_weight / static_cast<double>(n);
  }
  return ProbabilityVector(std::move(p));
}

/// Quantum state: Hermitian, positive semidefinite, unit trace.
/// Construction symmetrizes, clamps in-tolerance negative eigenvalues to
/// zero, renormalizes the trace to exactly 1, and rejects anything whose
/// repair would exceed the *_reject tolerances.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m)
      : dim_(m.rows()), op_(validated(m)) {}

  std::size_t dim() const { return dim_; }
  const HermitianOperator& hermitian() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

  EigenSystem eig() const { return hermitian_eig(op_); }

  /// Eigenvalues with sub-tolerance noise flushed to exact zero; the
  /// spectrum every entropic functional consumes.
  std::vector<double> spectrum() const {
    EigenSystem e = eig();
    for (double& x : e.values) {
      if (x < tolerance.zero_eigenvalue) x = 0.0;
    }
    return e.values;
  }

 private:
  static HermitianOperator validated(const ComplexMatrix& m) {
    const HermitianOperator h(m);  // rejects non-square / non-Hermitian
    const cdouble tr = h.matrix().trace();
    if (std::abs(tr - cdouble(1.0, 0.0)) > tolerance.trace_reject) {
      throw std::invalid_argument("DensityMatrix: trace deviates from 1");
    }
    const EigenSystem eig = hermitian_eig(h);
    const std::size_t d = h.dim();
    std::vector<double> lam = eig.values;
    double sum = 0.0;
    for (double& x : lam) {
      if (x < -tolerance.eigenvalue_reject) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
      }
      x = std::max(x, 0.0);
      sum += x;
    }
    if (sum <= 0.0) {
      throw std::invalid_argument("DensityMatrix: zero operator");
    }
    ComplexMatrix out(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const double w = lam[k] / sum;
      if (w == 0.0) continue;
      for (std::size_t i = 0; i < d; ++i) {
        const cdouble vik = eig.vectors(i, k);
        for (std::size_t j = 0; j < d; ++j) {
          out(i, j) += w * vik * std::conj(eig.vectors(j, k));
        }
      }
    }
    return HermitianOperator(out);
  }

  std::size_t dim_;
  HermitianOperator op_;
};

inline DensityMatrix make_density(const ComplexMatrix& m) {
  return DensityMatrix(m);
}

/// Haar-random pure state |psi><psi| on C^d.
inline DensityMatrix random_pure(std::size_t d, Rng& rng) {
  if (d == 0) throw std::invalid_argument("random_pure: d must be positive");
  const std::vector<cdouble> psi = haar_vector(d, rng);
  return DensityMatrix(outer_product(psi, psi));
}

/// Mixed state of rank at most `rank`, obtained by tracing out a
/// rank-dimensional environment from a Haar-random pure state.
inline DensityMatrix random_mixed(std::size_t d, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > d) {
    throw std::invalid_argument("random_mixed: rank must be in [1, d]");
  }
  const std::vector<cdouble> psi = haar_vector(d * rank, rng);
  const ComplexMatrix reduced =
      partial_trace(outer_product(psi, psi), d, rank, Subsystem::left);
  return DensityMatrix(reduced);
}

/// Unit vector on H_R (x) H_Q together with the factor dimensions.
struct PurifiedState {
  std::vector<cdouble> vec;
  std::size_t d_r;
  std::size_t d_q;

  ComplexMatrix projector() const { return outer_product(vec, vec); }
};

/// Canonical purification sum_k sqrt(lambda_k) |e_k> (x) |lambda_k> with
/// d_R = d_Q = dim(rho). Eigenvector phases are fixed by the
/// eigensolver, so equal inputs give identical vectors.
inline PurifiedState purify(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const EigenSystem eig = rho.eig();
  std::vector<cdouble> psi(d * d, cdouble(0.0, 0.0));
  for (std::size_t k = 0; k < d; ++k) {
    const double lam = std::max(eig.values[k], 0.0);
    if (lam == 0.0) continue;
    const double root = std::sqrt(lam);
    for (std::size_t i = 0; i < d; ++i) {
      psi[k * d + i] = root * eig.vectors(i, k);
    }
  }
  const double n = vector_norm(psi);
  for (auto& z : psi) z /= n;
  return PurifiedState{std::move(psi), d, d};
}

}  // namespace qtsallis
