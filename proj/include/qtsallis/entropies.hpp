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

#include "qtsallis/states.hpp"
#include "qtsallis/tolerances.hpp"

namespace qtsallis {

/// Entropic order q >= 0. Orders within tolerance.q_one_crossover of 1
/// switch every functional to its natural-log limit, keeping one code
/// path per functional.
class QOrder {
 public:
  QOrder(double q) : q_(q) {  // NOLINT(google-explicit-constructor)
    if (!std::isfinite(q) || q < 0.0) {
      throw std::domain_error("QOrder: q must be finite and nonnegative");
    }
  }

  double value() const { return q_; }
  bool is_one() const { return std::abs(q_ - 1.0) <= tolerance.q_one_crossover; }

 private:
  double q_;
};

/// Real value extended with a tagged +infinity; the sentinel never enters
/// floating-point arithmetic.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v) { return ExtendedReal(v, false); }
  static ExtendedReal infinity() { return ExtendedReal(0.0, true); }

  bool is_infinite() const { return infinite_; }

  double value() const {
    if (infinite_) {
      throw std::logic_error("ExtendedReal: value() on +infinity");
    }
    return value_;
  }

 private:
  ExtendedReal(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

/// q-logarithm ln_q x = (x^{1-q} - 1)/(1-q), natural log at q = 1.
/// Evaluated through expm1 so the q -> 1 approach stays cancellation-free.
inline double q_log(double x, QOrder q) {
  if (!(x > 0.0)) {
    throw std::domain_error("q_log: argument must be positive");
  }
  if (q.is_one()) return std::log(x);
  const double one_minus_q = 1.0 - q.value();
  return std::expm1(one_minus_q * std::log(x)) / one_minus_q;
}

/// eta_q(x) = (x^q - x)/(1-q), the summand of the Tsallis entropy, with
/// eta_q(0) = 0 and eigenvalue noise below tolerance.zero_eigenvalue
/// flushed to zero. eta_1(x) = -x ln x.
inline double eta_q(double x, QOrder q) {
  if (x <= tolerance.zero_eigenvalue) return 0.0;
  if (q.is_one()) return -x * std::log(x);
  const double qm1 = q.value() - 1.0;
  return -x * std::expm1(qm1 * std::log(x)) / qm1;
}

/// Spectral power x^a under the library's zero conventions: eigenvalue
/// noise below tolerance.zero_eigenvalue is an exact zero and 0^0 = 0,
/// so rho^0 is the support projector.
inline double pow_zero(double x, double a) {
  if (x <= tolerance.zero_eigenvalue) return 0.0;
  return std::exp(a * std::log(x));
}

inline double tsallis_entropy(const ProbabilityVector& p, QOrder q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += eta_q(p[i], q);
  return s;
}

/// Tsallis q-entropy of a state, tr(eta_q(rho)) through the spectrum.
inline double tsallis_entropy(const DensityMatrix& rho, QOrder q) {
  double s = 0.0;
  for (double lam : rho.spectrum()) s += eta_q(lam, q);
  return s;
}

/// Binary Tsallis entropy H_q(p) = eta_q(p) + eta_q(1-p). Accepts
/// round-off overshoot up to tolerance.check outside [0,1].
inline double binary_entropy(double p, QOrder q) {
  if (!(p >= -tolerance.check && p <= 1.0 + tolerance.check)) {
    throw std::domain_error("binary_entropy: p must lie in [0, 1]");
  }
  p = std::min(std::max(p, 0.0), 1.0);
  return eta_q(p, q) + eta_q(1.0 - p, q);
}

/// Classical relative q-entropy D_q(p||r). Terms with p_i = 0 vanish;
/// r_i = 0 < p_i gives +infinity for q >= 1 and a finite value below.
inline ExtendedReal relative_entropy(const ProbabilityVector& p,
                                     const ProbabilityVector& r, QOrder q) {
  if (p.size() != r.size()) {
    throw std::invalid_argument("relative_entropy: length mismatch");
  }
  const bool q_ge_one = q.is_one() || q.value() > 1.0;
  double mass_off_support = 0.0;  // p-mass where r vanishes
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && r[i] <= 0.0) mass_off_support += p[i];
  }
  if (q_ge_one && mass_off_support > 0.0) return ExtendedReal::infinity();

  if (q.is_one()) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0) s += p[i] * (std::log(p[i]) - std::log(r[i]));
    }
    return ExtendedReal::finite(s);
  }

  // D_q = (C - sum_i p_i expm1((1-q) ln(r_i/p_i))) / (1-q), where C is
  // the p-mass off the support of r; algebraically identical to the
  // textbook power sum but stable through q = 1.
  const double one_minus_q = 1.0 - q.value();
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0 && r[i] > 0.0) {
      s += p[i] * std::expm1(one_minus_q * std::log(r[i] / p[i]));
    }
  }
  return ExtendedReal::finite((mass_off_support - s) / one_minus_q);
}

/// d_q(u, v) = D_q({u, 1-u} || {v, 1-v}).
inline ExtendedReal relative_entropy_binary(double u, double v, QOrder q) {
  for (double x : {u, v}) {
    if (!(x >= -tolerance.check && x <= 1.0 + tolerance.check)) {
      throw std::domain_error("relative_entropy_binary: arguments must lie in [0, 1]");
    }
  }
  u = std::min(std::max(u, 0.0), 1.0);
  v = std::min(std::max(v, 0.0), 1.0);
  return relative_entropy(ProbabilityVector({u, 1.0 - u}),
                          ProbabilityVector({v, 1.0 - v}), q);
}

/// Quantum relative q-entropy D_q(rho||sigma) =
/// (1 - tr(rho^q sigma^{1-q}))/(1-q). For q >= 1 the result is
/// +infinity when rho puts more than tolerance.support_mass on
/// ker(sigma); sigma powers are always taken on its support.
inline ExtendedReal relative_entropy(const DensityMatrix& rho,
                                     const DensityMatrix& sigma, QOrder q) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  const EigenSystem er = rho.eig();
  const EigenSystem es = sigma.eig();
  const std::size_t d = rho.dim();

  std::vector<double> p = er.values;
  std::vector<double> s = es.values;
  for (double& x : p) x = (x < tolerance.zero_eigenvalue) ? 0.0 : x;
  for (double& x : s) x = (x < tolerance.zero_eigenvalue) ? 0.0 : x;

  // overlap(j, k) = |<rho_j|sigma_k>|^2
  const ComplexMatrix gram = er.vectors.dagger() * es.vectors;
  const auto overlap = [&gram](std::size_t j, std::size_t k) {
    return std::norm(gram(j, k));
  };

  double mass_off_support = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    if (p[j] == 0.0) continue;
    for (std::size_t k = 0; k < d; ++k) {
      if (s[k] == 0.0) mass_off_support += overlap(j, k) * p[j];
    }
  }
  const bool q_ge_one = q.is_one() || q.value() > 1.0;
  if (q_ge_one && mass_off_support > tolerance.support_mass) {
    return ExtendedReal::infinity();
  }

  if (q.is_one()) {
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] == 0.0) continue;
      sum += p[j] * std::log(p[j]);
      for (std::size_t k = 0; k < d; ++k) {
        if (s[k] > 0.0) sum -= overlap(j, k) * p[j] * std::log(s[k]);
      }
    }
    return ExtendedReal::finite(sum);
  }

  const double one_minus_q = 1.0 - q.value();
  double sum = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    if (p[j] == 0.0) continue;
    for (std::size_t k = 0; k < d; ++k) {
      if (s[k] == 0.0) continue;
      const double w = overlap(j, k) * p[j];
      if (w == 0.0) continue;
      sum += w * std::expm1(one_minus_q * std::log(s[k] / p[j]));
    }
  }
  const double off = q_ge_one ? 0.0 : mass_off_support;
  return ExtendedReal::finite((off - sum) / one_minus_q);
}

}  // namespace qtsallis
