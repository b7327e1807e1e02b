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
#include <vector>

#include "qtsallis/states.hpp"

namespace qtsallis {

/// Trace-preserving quantum operation in Kraus form: a finite list of
/// equal-dimension matrices with sum_m E_m^dagger E_m = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus)
      : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
      throw std::invalid_argument("KrausChannel: empty Kraus list");
    }
    dim_ = kraus_.front().rows();
    for (const auto& e : kraus_) {
      if (!e.is_square() || e.rows() != dim_) {
        throw std::invalid_argument("KrausChannel: operators must be square and equal-dimension");
      }
      if (!e.all_finite()) {
        throw std::invalid_argument("KrausChannel: non-finite entries");
      }
    }
    ComplexMatrix sum(dim_, dim_);
    for (const auto& e : kraus_) sum += e.dagger() * e;
    if (!approx_equal(sum, ComplexMatrix::identity(dim_),
                      tolerance.completeness_reject)) {
      throw std::invalid_argument("KrausChannel: completeness relation violated");
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return kraus_.size(); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t dim_;
};

inline KrausChannel make_channel(std::vector<ComplexMatrix> kraus) {
  return KrausChannel(std::move(kraus));
}

/// rho -> sum_m E_m rho E_m^dagger.
inline DensityMatrix apply(const KrausChannel& e, const DensityMatrix& rho) {
  if (e.dim() != rho.dim()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  ComplexMatrix out(e.dim(), e.dim());
  for (const auto& k : e.kraus()) out += k * rho.matrix() * k.dagger();
  return DensityMatrix(out);
}

/// (id_R (x) E)(|psi><psi|): the joint reference/principal output state.
inline DensityMatrix joint_output(const KrausChannel& e,
                                  const PurifiedState& psi) {
  if (e.dim() != psi.d_q) {
    throw std::invalid_argument("joint_output: channel dimension must match d_q");
  }
  const std::size_t d_r = psi.d_r;
  const std::size_t d_q = psi.d_q;
  ComplexMatrix out(d_r * d_q, d_r * d_q);
  std::vector<cdouble> image(d_r * d_q);
  for (const auto& k : e.kraus()) {
    // (I (x) E_m)|psi>, block by block over the reference index.
    for (std::size_t r = 0; r < d_r; ++r) {
      for (std::size_t i = 0; i < d_q; ++i) {
        cdouble s = 0.0;
        for (std::size_t j = 0; j < d_q; ++j) s += k(i, j) * psi.vec[r * d_q + j];
        image[r * d_q + i] = s;
      }
    }
    out += outer_product(image, image);
  }
  return DensityMatrix(out);
}

/// Pinching onto the orthonormal basis given by the columns of `basis`:
/// Kraus set {|b_i><b_i|}; outputs are diagonal in that basis.
inline KrausChannel pinching_channel(const ComplexMatrix& basis) {
  if (!basis.is_square()) {
    throw std::invalid_argument("pinching_channel: basis must span the space");
  }
  const std::size_t d = basis.rows();
  if (!approx_equal(basis.dagger() * basis, ComplexMatrix::identity(d), 1e-9)) {
    throw std::invalid_argument("pinching_channel: basis is not orthonormal");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix proj(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        proj(i, j) = basis(i, k) * std::conj(basis(j, k));
      }
    }
    kraus.push_back(std::move(proj));
  }
  return KrausChannel(std::move(kraus));
}

enum class ChannelKind { identity, unitary, depolarizing, amplitude_damping, phase_damping };

inline std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::identity: return "identity";
    case ChannelKind::unitary: return "unitary";
    case ChannelKind::depolarizing: return "depolarizing";
    case ChannelKind::amplitude_damping: return "amplitude_damping";
    case ChannelKind::phase_damping: return "phase_damping";
  }
  throw std::logic_error("to_string: unknown ChannelKind");
}

namespace detail {

// Weyl shift-and-clock unitary basis X^a Z^b; reduces to the Pauli set
// (up to phase) at d = 2, but the qubit case uses the literal Paulis.
inline std::vector<ComplexMatrix> unitary_operator_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  if (d == 2) {
    basis.push_back(ComplexMatrix::identity(2));
    basis.push_back(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});                    // X
    basis.push_back(ComplexMatrix{{0.0, cdouble(0.0, -1.0)}, {cdouble(0.0, 1.0), 0.0}});  // Y
    basis.push_back(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});                   // Z
    return basis;
  }
  const double two_pi = 2.0 * 3.14159265358979323846;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      ComplexMatrix u(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        const double angle = two_pi * static_cast<double>(b * j) / static_cast<double>(d);
        u((j + a) % d, j) = cdouble(std::cos(angle), std::sin(angle));
      }
      basis.push_back(std::move(u));
    }
  }
  return basis;
}

}  // namespace detail

/// Named channel families. `param` is the damping/mixing strength in
/// [0, 1] (depolarizing, amplitude_damping, phase_damping), the rotation
/// fraction for `unitary` (plane rotation by pi*param in the (e0, e1)
/// plane), and ignored for `identity`. Damping families are qubit-only.
inline KrausChannel standard_channel(ChannelKind kind, std::size_t d,
                                     double param = 0.0) {
  if (d == 0) throw std::invalid_argument("standard_channel: d must be positive");
  const bool needs_param = kind != ChannelKind::identity;
  if (needs_param && !(param >= 0.0 && param <= 1.0)) {
    throw std::invalid_argument("standard_channel: param must lie in [0, 1]");
  }
  switch (kind) {
    case ChannelKind::identity:
      return KrausChannel({ComplexMatrix::identity(d)});
    case ChannelKind::unitary: {
      ComplexMatrix u = ComplexMatrix::identity(d);
      if (d >= 2) {
        const double theta = 3.14159265358979323846 * param;
        u(0, 0) = std::cos(theta);
        u(0, 1) = -std::sin(theta);
        u(1, 0) = std::sin(theta);
        u(1, 1) = std::cos(theta);
      }
      return KrausChannel({u});
    }
    case ChannelKind::depolarizing: {
      const double dd = static_cast<double>(d * d);
      std::vector<ComplexMatrix> kraus;
      const auto basis = detail::unitary_operator_basis(d);
      kraus.push_back(std::sqrt(1.0 - param * (dd - 1.0) / dd) * basis[0]);
      const double w = std::sqrt(param / dd);
      if (w > 0.0) {
        for (std::size_t m = 1; m < basis.size(); ++m) {
          kraus.push_back(w * basis[m]);
        }
      }
      return KrausChannel(std::move(kraus));
    }
    case ChannelKind::amplitude_damping: {
      if (d != 2) {
        throw std::invalid_argument("standard_channel: amplitude_damping is qubit-only");
      }
      ComplexMatrix e0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - param)}};
      ComplexMatrix e1{{0.0, std::sqrt(param)}, {0.0, 0.0}};
      return KrausChannel({std::move(e0), std::move(e1)});
    }
    case ChannelKind::phase_damping: {
      if (d != 2) {
        throw std::invalid_argument("standard_channel: phase_damping is qubit-only");
      }
      ComplexMatrix e0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - param)}};
      ComplexMatrix e1{{0.0, 0.0}, {0.0, std::sqrt(param)}};
      return KrausChannel({std::move(e0), std::move(e1)});
    }
  }
  throw std::logic_error("standard_channel: unknown kind");
}

/// Random channel from a Haar Stinespring isometry V : H_Q -> H_Q (x) H_E
/// with dim(H_E) = m; E_k = (I (x) <e_k|) V. m = 1 gives a Haar-random
/// unitary channel.
inline KrausChannel random_channel(std::size_t d, std::size_t m, Rng& rng) {
  if (d == 0 || m == 0) {
    throw std::invalid_argument("random_channel: dimensions must be positive");
  }
  const ComplexMatrix v = haar_isometry(d * m, d, rng);
  std::vector<ComplexMatrix> kraus(m, ComplexMatrix(d, d));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        kraus[k](i, j) = v(i * m + k, j);
      }
    }
  }
  return KrausChannel(std::move(kraus));
}

/// Full environment by default: m = d^2 Kraus operators.
inline KrausChannel random_channel(std::size_t d, Rng& rng) {
  return random_channel(d, d * d, rng);
}

/// Convex mixture theta*G + (1-theta)*F as a single Kraus channel; Kraus
/// sets scaled by sqrt(theta) and sqrt(1-theta), zero-weight sides dropped.
inline KrausChannel mix_channels(double theta, const KrausChannel& g,
                                 const KrausChannel& f) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("mix_channels: theta must lie in [0, 1]");
  }
  if (g.dim() != f.dim()) {
    throw std::invalid_argument("mix_channels: dimension mismatch");
  }
  std::vector<ComplexMatrix> kraus;
  if (theta > 0.0) {
    const double w = std::sqrt(theta);
    for (const auto& k : g.kraus()) kraus.push_back(w * k);
  }
  if (theta < 1.0) {
    const double w = std::sqrt(1.0 - theta);
    for (const auto& k : f.kraus()) kraus.push_back(w * k);
  }
  return KrausChannel(std::move(kraus));
}

}  // namespace qtsallis
