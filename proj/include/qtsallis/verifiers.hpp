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
#include <string>
#include <utility>
#include <vector>

#include "qtsallis/exchange.hpp"

namespace qtsallis {

/// Outcome of one inequality evaluation lhs <= rhs. A +infinity rhs is
/// satisfied by definition; a +infinity lhs against a finite rhs is a
/// violation. `gap` is rhs - lhs and only meaningful when gap_defined.
struct InequalityReport {
  std::string name;
  ExtendedReal lhs = ExtendedReal::finite(0.0);
  ExtendedReal rhs = ExtendedReal::finite(0.0);
  double gap = 0.0;
  bool gap_defined = false;
  bool satisfied = false;
  double tol = 0.0;
  std::string instance;
};

inline InequalityReport make_report(std::string name, ExtendedReal lhs,
                                    ExtendedReal rhs,
                                    double tol = tolerance.check,
                                    std::string instance = {}) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.instance = std::move(instance);
  if (rhs.is_infinite()) {
    r.satisfied = true;
  } else if (lhs.is_infinite()) {
    r.satisfied = false;
  } else {
    r.gap = rhs.value() - lhs.value();
    r.gap_defined = true;
    r.satisfied = lhs.value() <= rhs.value() + tol;
  }
  return r;
}

inline InequalityReport make_report(std::string name, double lhs, double rhs,
                                    double tol = tolerance.check,
                                    std::string instance = {}) {
  return make_report(std::move(name), ExtendedReal::finite(lhs),
                     ExtendedReal::finite(rhs), tol, std::move(instance));
}

namespace detail {

inline void require_q_window(QOrder q, double lo, double hi, const char* where) {
  if (q.value() < lo || q.value() > hi) {
    throw std::domain_error(std::string(where) + ": q outside its validity window");
  }
}

inline double clamp01(double x) { return std::min(std::max(x, 0.0), 1.0); }

}  // namespace detail

/// Fano-type upper bound H_q(F) + (1-F)^q ln_q(d_R d - 1) on the
/// q-entropy exchange. d_R = d is the canonical-purification case.
inline double fano_bound(double fidelity, std::size_t d_r, std::size_t d,
                         QOrder q) {
  if (!(fidelity >= -tolerance.check && fidelity <= 1.0 + tolerance.check)) {
    throw std::domain_error("fano_bound: fidelity must lie in [0, 1]");
  }
  const double f = detail::clamp01(fidelity);
  const double weight = pow_zero(1.0 - f, q.value());
  double bound = binary_entropy(f, q);
  if (weight > 0.0) {
    bound += weight * q_log(static_cast<double>(d_r * d) - 1.0, q);
  }
  return bound;
}

/// S_q(rho, E) <= fano_bound(F(rho, E), d, d, q), valid for all q >= 0.
inline InequalityReport check_fano(const DensityMatrix& rho,
                                   const KrausChannel& e, QOrder q,
                                   double tol = tolerance.check,
                                   std::string instance = {}) {
  const double lhs = entropy_exchange(rho, e, q);
  const double rhs = fano_bound(entanglement_fidelity(rho, e), rho.dim(),
                                rho.dim(), q);
  return make_report("fano", lhs, rhs, tol, std::move(instance));
}

/// Data-processing-type bound I_q(rho, E) <= S_q(rho), q > 1 only;
/// equality is reached by perfectly reversible (unitary) operations.
inline InequalityReport check_coherent_bound(const DensityMatrix& rho,
                                             const KrausChannel& e, QOrder q,
                                             double tol = tolerance.check,
                                             std::string instance = {}) {
  if (q.is_one() || q.value() <= 1.0) {
    throw std::domain_error("check_coherent_bound: requires q > 1");
  }
  const double lhs = coherent_q_information(rho, e, q);
  const double rhs = tsallis_entropy(rho, q);
  return make_report("coherent", lhs, rhs, tol, std::move(instance));
}

/// Subadditivity S_q(AB) <= S_q(A) + S_q(B) and the triangle inequality
/// |S_q(A) - S_q(B)| <= S_q(AB); both require q > 1.
inline std::pair<InequalityReport, InequalityReport> check_subadditivity(
    const DensityMatrix& rho_ab, std::size_t d_a, std::size_t d_b, QOrder q,
    double tol = tolerance.check, std::string instance = {}) {
  if (q.is_one() || q.value() <= 1.0) {
    throw std::domain_error("check_subadditivity: requires q > 1");
  }
  if (rho_ab.dim() != d_a * d_b) {
    throw std::invalid_argument("check_subadditivity: dimension mismatch");
  }
  const DensityMatrix rho_a(
      partial_trace(rho_ab.matrix(), d_a, d_b, Subsystem::left));
  const DensityMatrix rho_b(
      partial_trace(rho_ab.matrix(), d_a, d_b, Subsystem::right));
  const double s_ab = tsallis_entropy(rho_ab, q);
  const double s_a = tsallis_entropy(rho_a, q);
  const double s_b = tsallis_entropy(rho_b, q);
  return {make_report("subadditivity", s_ab, s_a + s_b, tol, instance),
          make_report("triangle", std::abs(s_a - s_b), s_ab, tol, instance)};
}

/// Monotonicity D_q(E(rho) || E(sigma)) <= D_q(rho || sigma), q in [0, 2].
inline InequalityReport check_quantum_monotonicity(
    const DensityMatrix& rho, const DensityMatrix& sigma,
    const KrausChannel& e, QOrder q, double tol = tolerance.check,
    std::string instance = {}) {
  detail::require_q_window(q, 0.0, 2.0, "check_quantum_monotonicity");
  const ExtendedReal lhs = relative_entropy(apply(e, rho), apply(e, sigma), q);
  const ExtendedReal rhs = relative_entropy(rho, sigma, q);
  return make_report("monotonicity", lhs, rhs, tol, std::move(instance));
}

/// Column-stochastic real matrix: entries nonnegative, each column sums
/// to 1. Acts on probability vectors written as columns.
class StochasticMatrix {
 public:
  StochasticMatrix(std::size_t rows, std::size_t cols,
                   std::vector<double> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_ || rows_ == 0 || cols_ == 0) {
      throw std::invalid_argument("StochasticMatrix: bad shape");
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double t = (*this)(i, j);
        if (!std::isfinite(t) || t < -1e-12) {
          throw std::invalid_argument("StochasticMatrix: negative entry");
        }
        sum += t;
      }
      if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("StochasticMatrix: column does not sum to 1");
      }
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ProbabilityVector apply(const ProbabilityVector& p) const {
    if (p.size() != cols_) {
      throw std::invalid_argument("StochasticMatrix: length mismatch");
    }
    std::vector<double> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * p[j];
    }
    return ProbabilityVector(std::move(out));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// 2-by-n 0/1 coarse graining: the first `first_block` components feed
/// row 0, the rest feed row 1.
inline StochasticMatrix binary_coarse_graining(std::size_t n,
                                               std::size_t first_block) {
  if (first_block > n) {
    throw std::invalid_argument("binary_coarse_graining: block too large");
  }
  std::vector<double> t(2 * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) t[(j < first_block ? 0 : n) + j] = 1.0;
  return StochasticMatrix(2, n, std::move(t));
}

inline StochasticMatrix random_stochastic(std::size_t rows, std::size_t cols,
                                          Rng& rng) {
  std::vector<double> t(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const ProbabilityVector col = random_distribution(rows, rng);
    for (std::size_t i = 0; i < rows; ++i) t[i * cols + j] = col[i];
  }
  return StochasticMatrix(rows, cols, std::move(t));
}

/// Classical monotonicity D_q(Tp || Tr) <= D_q(p || r), any q >= 0.
inline InequalityReport check_classical_monotonicity(
    const ProbabilityVector& p, const ProbabilityVector& r,
    const StochasticMatrix& t, QOrder q, double tol = tolerance.check,
    std::string instance = {}) {
  const ExtendedReal lhs = relative_entropy(t.apply(p), t.apply(r), q);
  const ExtendedReal rhs = relative_entropy(p, r, q);
  return make_report("classical_monotonicity", lhs, rhs, tol,
                     std::move(instance));
}

/// Pinsker-type lower bounds on D_q(rho || sigma) for q in [0, 2]:
/// always d_q(u, v) with u, v the positive-part masses of the Jordan
/// split of rho - sigma; at q = 1/2 additionally the chain
/// 2 - 2 sqrt(1 - t^2) and t^2 with t half the trace-norm distance; at
/// q = 1 the classical baseline 2 t^2.
inline std::vector<InequalityReport> pinsker_report(
    const DensityMatrix& rho, const DensityMatrix& sigma, QOrder q,
    double tol = tolerance.check, std::string instance = {}) {
  detail::require_q_window(q, 0.0, 2.0, "pinsker_report");
  const JordanSplit split = jordan_split(rho.hermitian(), sigma.hermitian());
  const double u =
      detail::clamp01((split.proj_plus.matrix() * rho.matrix()).trace().real());
  const double v =
      detail::clamp01((split.proj_plus.matrix() * sigma.matrix()).trace().real());
  const ExtendedReal divergence = relative_entropy(rho, sigma, q);

  std::vector<InequalityReport> reports;
  reports.push_back(make_report("pinsker", relative_entropy_binary(u, v, q),
                                divergence, tol, instance));
  const double t = std::min(split.t, 1.0);
  if (std::abs(q.value() - 0.5) <= 1e-12) {
    const double mid = 2.0 - 2.0 * std::sqrt(std::max(1.0 - t * t, 0.0));
    reports.push_back(make_report("pinsker_sqrt_chain",
                                  ExtendedReal::finite(mid), divergence, tol,
                                  instance));
    reports.push_back(make_report("pinsker_quadratic_chain", t * t, mid, tol,
                                  instance));
  }
  if (q.is_one()) {
    reports.push_back(make_report("pinsker_classical",
                                  ExtendedReal::finite(2.0 * t * t), divergence,
                                  tol, instance));
  }
  return reports;
}

/// Ordering D_p >= D_1 >= D_q for p in (1, 2] and q in [0, 1), emitted
/// as the two comparisons against the q = 1 value.
inline std::vector<InequalityReport> check_relative_ordering(
    const DensityMatrix& rho, const DensityMatrix& sigma, QOrder p_order,
    QOrder q_order, double tol = tolerance.check, std::string instance = {}) {
  if (p_order.is_one() || p_order.value() <= 1.0 || p_order.value() > 2.0) {
    throw std::domain_error("check_relative_ordering: p_order must lie in (1, 2]");
  }
  if (q_order.is_one() || q_order.value() >= 1.0) {
    throw std::domain_error("check_relative_ordering: q_order must lie in [0, 1)");
  }
  const ExtendedReal d_p = relative_entropy(rho, sigma, p_order);
  const ExtendedReal d_1 = relative_entropy(rho, sigma, QOrder(1.0));
  const ExtendedReal d_q = relative_entropy(rho, sigma, q_order);
  return {make_report("ordering_upper", d_1, d_p, tol, instance),
          make_report("ordering_lower", d_q, d_1, tol, instance)};
}

/// Binary Bhattacharyya coefficient sqrt(uv) + sqrt((1-u)(1-v));
/// d_{1/2}(u, v) = 2 (1 - binary_bhattacharyya(u, v)).
inline double binary_bhattacharyya(double u, double v) {
  for (double x : {u, v}) {
    if (!(x >= -tolerance.check && x <= 1.0 + tolerance.check)) {
      throw std::domain_error("binary_bhattacharyya: arguments must lie in [0, 1]");
    }
  }
  u = detail::clamp01(u);
  v = detail::clamp01(v);
  return std::sqrt(u * v) + std::sqrt((1.0 - u) * (1.0 - v));
}

/// Grid scan of the Bhattacharyya coefficient over the segment
/// {u = t + v} of the constraint set |u - v| = t, against the bound
/// sqrt(1 - t^2). The maximizer sits at u = (1+t)/2, v = (1-t)/2.
struct BhattacharyyaScan {
  InequalityReport report;
  double max_u = 0.0;
  double max_v = 0.0;
  double grid_step = 0.0;
};

inline BhattacharyyaScan bhattacharyya_bound_report(
    double t, std::size_t grid_points = 10000, double tol = tolerance.check,
    std::string instance = {}) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("bhattacharyya_bound_report: t must lie in [0, 1]");
  }
  if (grid_points < 1) {
    throw std::invalid_argument("bhattacharyya_bound_report: empty grid");
  }
  BhattacharyyaScan scan;
  scan.grid_step = (1.0 - t) / static_cast<double>(grid_points);
  double best = -1.0;
  for (std::size_t i = 0; i <= grid_points; ++i) {
    const double v = (t >= 1.0) ? 0.0 : static_cast<double>(i) * scan.grid_step;
    const double g = binary_bhattacharyya(t + v, v);
    if (g > best) {
      best = g;
      scan.max_u = t + v;
      scan.max_v = v;
    }
    if (t >= 1.0) break;
  }
  scan.report = make_report("bhattacharyya_bound", best,
                            std::sqrt(std::max(1.0 - t * t, 0.0)), tol,
                            std::move(instance));
  return scan;
}

/// Fano-type bound with a free nonsingular reference state omega on the
/// joint reference/principal space, q in [0, 2]:
///   S_q(rho, E) <= -d_q(F_e, F_omega) - tr((rho^{RQ'})^q ln_q(omega)).
/// For q >= 1 the report also carries the weaker linear variant (the
/// power replaced by rho^{RQ'} itself) and the check that its
/// right-hand side dominates the sharp one.
inline std::vector<InequalityReport> reference_fano_report(
    const DensityMatrix& rho, const KrausChannel& e,
    const DensityMatrix& omega, QOrder q, double tol = tolerance.check,
    std::string instance = {}) {
  detail::require_q_window(q, 0.0, 2.0, "reference_fano_report");
  const std::size_t d = rho.dim();
  if (omega.dim() != d * d) {
    throw std::invalid_argument("reference_fano_report: omega must live on the joint space");
  }
  const EigenSystem omega_eig = omega.eig();
  if (omega_eig.values.front() <= tolerance.support_mass) {
    throw std::invalid_argument("reference_fano_report: omega must be nonsingular");
  }

  const PurifiedState psi = purify(rho);
  const DensityMatrix joint = joint_output(e, psi);
  const double f_e = detail::clamp01(entanglement_fidelity(rho, e));
  const double f_omega = detail::clamp01(expectation(omega.matrix(), psi.vec).real());

  const HermitianOperator lnq_omega = matrix_function(
      omega.hermitian(), [&q](double x) { return q_log(x, q); });
  const HermitianOperator joint_pow = matrix_function(
      joint.hermitian(), [&q](double x) { return pow_zero(x, q.value()); });

  const double divergence_term =
      relative_entropy_binary(f_e, f_omega, q).value();
  const double lhs = entropy_exchange(rho, e, q);
  const double rhs_sharp =
      -divergence_term -
      (joint_pow.matrix() * lnq_omega.matrix()).trace().real();

  std::vector<InequalityReport> reports;
  reports.push_back(
      make_report("reference_fano", lhs, rhs_sharp, tol, instance));
  if (q.is_one() || q.value() > 1.0) {
    const double rhs_linear =
        -divergence_term -
        (joint.matrix() * lnq_omega.matrix()).trace().real();
    reports.push_back(
        make_report("reference_fano_linear", lhs, rhs_linear, tol, instance));
    reports.push_back(make_report("reference_fano_variant_order", rhs_sharp,
                                  rhs_linear, tol, instance));
  }
  return reports;
}

/// Closed forms for a product-form reference state
/// omega_tilde = sum_j mu_j |e_j><e_j| (x) omega_q on the joint space:
/// F_omega = sum_j lambda_j mu_j <lambda_j|omega_q|lambda_j> and
/// tr(rho^{RQ'} ln_q omega_tilde) =
///   sum_j lambda_j ln_q(mu_j)
///   + sum_j mu_j^{1-q} lambda_j tr(E(|lambda_j><lambda_j|) ln_q omega_q).
/// Both are recomputed densely (tensor-built omega_tilde) and must agree
/// within tolerance.closed_form; disagreement throws.
struct ProductOmegaTerms {
  double f_omega;
  double trace_term;
  // Dense-route values, kept for reporting; equal to the closed forms
  // within tolerance.closed_form or the computation throws.
  double f_omega_dense;
  double trace_term_dense;
};

inline ProductOmegaTerms product_omega_terms(const DensityMatrix& rho,
                                             const KrausChannel& e,
                                             const ProbabilityVector& mu,
                                             const DensityMatrix& omega_q,
                                             QOrder q) {
  detail::require_q_window(q, 0.0, 2.0, "product_omega_terms");
  const std::size_t d = rho.dim();
  if (e.dim() != d || omega_q.dim() != d || mu.size() != d) {
    throw std::invalid_argument("product_omega_terms: dimension mismatch");
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (mu[j] <= 0.0) {
      throw std::invalid_argument("product_omega_terms: mu must be strictly positive");
    }
  }
  const EigenSystem omega_eig = omega_q.eig();
  if (omega_eig.values.front() <= tolerance.support_mass) {
    throw std::invalid_argument("product_omega_terms: omega_q must be nonsingular");
  }

  const EigenSystem rho_eig = rho.eig();
  const HermitianOperator lnq_omega = matrix_function(
      omega_q.hermitian(), [&q](double x) { return q_log(x, q); });

  ProductOmegaTerms closed{0.0, 0.0, 0.0, 0.0};
  const double one_minus_q = 1.0 - q.value();
  for (std::size_t j = 0; j < d; ++j) {
    const double lam = std::max(rho_eig.values[j], 0.0);
    std::vector<cdouble> vec(d);
    for (std::size_t i = 0; i < d; ++i) vec[i] = rho_eig.vectors(i, j);

    closed.f_omega +=
        lam * mu[j] * expectation(omega_q.matrix(), vec).real();

    ComplexMatrix channel_image(d, d);
    const ComplexMatrix proj = outer_product(vec, vec);
    for (const auto& k : e.kraus()) channel_image += k * proj * k.dagger();
    const double env_term =
        (channel_image * lnq_omega.matrix()).trace().real();
    closed.trace_term += lam * q_log(mu[j], q) +
                         std::exp(one_minus_q * std::log(mu[j])) * lam * env_term;
  }

  // Dense route: build omega_tilde explicitly and evaluate both traces.
  ComplexMatrix omega_tilde(d * d, d * d);
  for (std::size_t j = 0; j < d; ++j) {
    ComplexMatrix unit(d, d);
    unit(j, j) = mu[j];
    omega_tilde += tensor(unit, omega_q.matrix());
  }
  const PurifiedState psi = purify(rho);
  const DensityMatrix joint = joint_output(e, psi);
  closed.f_omega_dense = expectation(omega_tilde, psi.vec).real();
  const HermitianOperator lnq_tilde = matrix_function(
      HermitianOperator(omega_tilde), [&q](double x) { return q_log(x, q); });
  closed.trace_term_dense =
      (joint.matrix() * lnq_tilde.matrix()).trace().real();

  if (std::abs(closed.f_omega - closed.f_omega_dense) > tolerance.closed_form ||
      std::abs(closed.trace_term - closed.trace_term_dense) >
          tolerance.closed_form) {
    throw std::logic_error("product_omega_terms: closed form disagrees with dense evaluation");
  }
  return closed;
}

}  // namespace qtsallis
