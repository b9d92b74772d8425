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

#include "tangle/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tangle/error.hpp"

namespace tangle {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) {
    throw StateError("matrix data has " + std::to_string(data_.size()) +
                     " entries, expected " + std::to_string(dim_ * dim_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw StateError("matrix dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw StateError("matrix dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx a = (*this)(r, k);
      if (a == cplx{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  ComplexMatrix out = *this;
  out += rhs;
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw StateError("matrix dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(cplx scale) const {
  ComplexMatrix out = *this;
  for (auto& v : out.data_) v *= scale;
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw StateError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim() * b.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l)
          out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw StateError("matrix dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    s += std::conj(a.data()[i]) * b.data()[i];
  return s;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& input,
                                   double hermitian_tol) {
  const std::size_t n = input.dim();
  if (input.max_abs_diff(input.adjoint()) > hermitian_tol) {
    throw StateError("matrix is not Hermitian within tolerance");
  }
  // Work on the exactly Hermitian part.
  ComplexMatrix a = (input + input.adjoint()) * cplx{0.5};
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = 1e-13 * std::max(1.0, a.frobenius_norm());
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // Phase-rotate so the (p,q) element is real, then take the real
        // symmetric Jacobi step.
        const cplx phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
        const cplx upp = c;
        const cplx upq = s;
        const cplx uqp = -s * std::conj(phase);
        const cplx uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^dagger A
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V U
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double clip_tol) {
  const EigenDecomposition eig = hermitian_eigen(a);
  std::vector<double> roots(eig.values.size());
  // below the solver's rounding floor a root would only amplify noise
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(eig.values.empty() ? 0.0 : eig.values.front()));
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const double lambda = eig.values[k];
    if (lambda < -clip_tol) {
      throw StateError("matrix has negative eigenvalue " + std::to_string(lambda));
    }
    roots[k] = lambda > floor ? std::sqrt(lambda) : 0.0;
  }
  return eig.vectors * ComplexMatrix::diagonal(roots) * eig.vectors.adjoint();
}

}  // namespace tangle
