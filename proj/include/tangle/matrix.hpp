// Copyright 2026 The Tangle Authors
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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tangle {

using cplx = std::complex<double>;

/**
 * Dense square complex matrix, row-major. Sized for the small systems this
 * library handles (dimension <= 256).
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<cplx> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  std::span<const cplx> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// Largest entry modulus of (this - other).
  double max_abs_diff(const ComplexMatrix& other) const;

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(cplx scale) const;
  ComplexMatrix& operator+=(const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius inner product <a, b> = sum conj(a_ij) b_ij.
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
  int sweeps = 0;
};

/**
 * Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations. Sweeps stop once the off-diagonal Frobenius norm drops below
 * 1e-13 (scaled by max(1, ||A||_F)). Throws StateError when the input is not
 * Hermitian within `hermitian_tol`.
 */
EigenDecomposition hermitian_eigen(const ComplexMatrix& a,
                                   double hermitian_tol = 1e-12);

/// Positive square root V sqrt(max(lambda, 0)) V^dagger. Eigenvalues below
/// -clip_tol are rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, double clip_tol = 1e-10);

}  // namespace tangle
