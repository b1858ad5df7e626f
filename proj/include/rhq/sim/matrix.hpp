// Copyright 2026 The rhq Authors
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
#include <complex>
#include <cstddef>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/gate.hpp"

namespace rhq {

/// Square dense complex matrix, row-major. Only what unitary extraction and
/// its checks need.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim)
      : dim_(dim), data_(dim * dim, complex_t{0.0, 0.0}) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<complex_t>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  complex_t& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const complex_t& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw StructuralError("matrix dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const complex_t x = a(r, k);
        if (x == complex_t{}) continue;
        for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }

  /// Kronecker product, this matrix on the more significant index bits.
  ComplexMatrix kron(const ComplexMatrix& b) const {
    ComplexMatrix out(dim_ * b.dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        for (std::size_t i = 0; i < b.dim_; ++i)
          for (std::size_t j = 0; j < b.dim_; ++j)
            out(r * b.dim_ + i, c * b.dim_ + j) = (*this)(r, c) * b(i, j);
    return out;
  }

  /// Largest entrywise modulus of (this - other).
  double max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw StructuralError("matrix dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      d = std::max(d, std::abs(data_[i] - other.data_[i]));
    return d;
  }

  /// Distance to `other` after removing the best global phase, measured as
  /// the largest entrywise modulus.
  double max_abs_diff_up_to_phase(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw StructuralError("matrix dimension mismatch");
    complex_t overlap{0.0, 0.0};
    for (std::size_t i = 0; i < data_.size(); ++i)
      overlap += std::conj(other.data_[i]) * data_[i];
    const complex_t phase =
        std::abs(overlap) > 0 ? overlap / std::abs(overlap) : complex_t{1.0, 0.0};
    double d = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      d = std::max(d, std::abs(data_[i] - phase * other.data_[i]));
    return d;
  }

  /// max |(U^dagger U - I)_{ij}|.
  double unitarity_error() const {
    return (adjoint() * *this).max_abs_diff(identity(dim_));
  }

 private:
  std::size_t dim_ = 0;
  std::vector<complex_t> data_;
};

inline ComplexMatrix to_matrix(const Matrix2& m) {
  ComplexMatrix out(2);
  out(0, 0) = m[0];
  out(0, 1) = m[1];
  out(1, 0) = m[2];
  out(1, 1) = m[3];
  return out;
}

}  // namespace rhq
