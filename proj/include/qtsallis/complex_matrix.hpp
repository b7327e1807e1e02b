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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qtsallis {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major. The workhorse value type for
/// operators, Kraus elements and projectors; no view semantics, copies
/// are cheap at the dimensions this library targets (d <= 64).
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cdouble(0.0, 0.0)) {}

  ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw std::invalid_argument("ComplexMatrix: ragged initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<double>& entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cdouble& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  cdouble operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cdouble>& data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(cdouble scalar) {
    for (auto& z : data_) z *= scalar;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cdouble s, ComplexMatrix a) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cdouble s) {
    a *= s;
    return a;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("ComplexMatrix: shape mismatch in product");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cdouble aik = a(i, k);
        if (aik == cdouble(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  ComplexMatrix dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        out(j, i) = std::conj((*this)(i, j));
      }
    }
    return out;
  }

  cdouble trace() const {
    if (!is_square()) {
      throw std::invalid_argument("ComplexMatrix: trace of non-square matrix");
    }
    cdouble t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entrywise modulus (max norm).
  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (const auto& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

 private:
  void require_same_shape(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw std::invalid_argument("ComplexMatrix: shape mismatch");
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<cdouble> data_;
};

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).max_abs() <= tol;
}

/// Kronecker product; index convention (i,j) -> i * dim(b) + j.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cdouble aij = a(ia, ja);
      if (aij == cdouble(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = aij * b(ib, jb);
        }
      }
    }
  }
  return out;
}

/// Which factor of a bipartite space survives a partial trace.
enum class Subsystem { left, right };

/// Partial trace of a (d_left * d_right)-dimensional square matrix over
/// the factor NOT named by `keep`.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d_left,
                                   std::size_t d_right, Subsystem keep) {
  if (!m.is_square() || m.rows() != d_left * d_right) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (keep == Subsystem::left) {
    ComplexMatrix out(d_left, d_left);
    for (std::size_t a1 = 0; a1 < d_left; ++a1) {
      for (std::size_t a2 = 0; a2 < d_left; ++a2) {
        cdouble s = 0.0;
        for (std::size_t b = 0; b < d_right; ++b) {
          s += m(a1 * d_right + b, a2 * d_right + b);
        }
        out(a1, a2) = s;
      }
    }
    return out;
  }
  ComplexMatrix out(d_right, d_right);
  for (std::size_t b1 = 0; b1 < d_right; ++b1) {
    for (std::size_t b2 = 0; b2 < d_right; ++b2) {
      cdouble s = 0.0;
      for (std::size_t a = 0; a < d_left; ++a) {
        s += m(a * d_right + b1, a * d_right + b2);
      }
      out(b1, b2) = s;
    }
  }
  return out;
}

// -- vector helpers -----------------------------------------------------

inline cdouble inner_product(const std::vector<cdouble>& u,
                             const std::vector<cdouble>& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("inner_product: length mismatch");
  }
  cdouble s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

inline double vector_norm(const std::vector<cdouble>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

inline std::vector<cdouble> mat_vec(const ComplexMatrix& m,
                                    const std::vector<cdouble>& v) {
  if (m.cols() != v.size()) {
    throw std::invalid_argument("mat_vec: length mismatch");
  }
  std::vector<cdouble> out(m.rows(), cdouble(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cdouble s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

inline ComplexMatrix outer_product(const std::vector<cdouble>& u,
                                   const std::vector<cdouble>& v) {
  ComplexMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      out(i, j) = u[i] * std::conj(v[j]);
    }
  }
  return out;
}

/// <psi| M |psi>.
inline cdouble expectation(const ComplexMatrix& m,
                           const std::vector<cdouble>& psi) {
  return inner_product(psi, mat_vec(m, psi));
}

}  // namespace qtsallis
