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
#include <cstdint>
#include <random>
#include <vector>

#include "qtsallis/complex_matrix.hpp"

namespace qtsallis {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic child seed for (suite stream, instance index). Results
/// must not depend on evaluation order, so every instance owns a stream
/// derived from the master seed alone.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
  return splitmix64(splitmix64(master ^ splitmix64(stream)) + index);
}

/// mt19937_64 with hand-rolled uniform/normal mappings. std:: engines are
/// bit-exact across platforms but std:: distributions are not; sampling
/// goes through fixed arithmetic so a seed pins the byte-exact output
/// everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (two uniforms per call, no cache).
  double normal() {
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  cdouble complex_normal() {
    const double re = normal();
    const double im = normal();
    return cdouble(re, im);
  }

  /// Index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) %
           (n == 0 ? 1 : n);
  }

 private:
  std::mt19937_64 engine_;
};

/// Haar-distributed unit vector in C^d.
inline std::vector<cdouble> haar_vector(std::size_t d, Rng& rng) {
  std::vector<cdouble> v(d);
  for (auto& z : v) z = rng.complex_normal();
  const double n = vector_norm(v);
  for (auto& z : v) z /= n;
  return v;
}

/// Haar-distributed isometry V : C^cols -> C^rows (rows >= cols), built
/// from a complex Gaussian matrix by modified Gram-Schmidt with one
/// re-orthogonalization pass. MGS leaves the R diagonal real positive,
/// which is exactly the phase convention that makes Q Haar.
inline ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols,
                                   Rng& rng) {
  if (cols > rows) {
    throw std::invalid_argument("haar_isometry: cols must not exceed rows");
  }
  std::vector<std::vector<cdouble>> q(cols, std::vector<cdouble>(rows));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) q[j][i] = rng.complex_normal();
  }
  for (std::size_t j = 0; j < cols; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const cdouble proj = inner_product(q[k], q[j]);
        for (std::size_t i = 0; i < rows; ++i) q[j][i] -= proj * q[k][i];
      }
    }
    const double n = vector_norm(q[j]);
    if (n == 0.0) {
      throw std::runtime_error("haar_isometry: degenerate Gaussian sample");
    }
    for (std::size_t i = 0; i < rows; ++i) q[j][i] /= n;
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = q[j][i];
  }
  return out;
}

inline ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  return haar_isometry(d, d, rng);
}

}  // namespace qtsallis
