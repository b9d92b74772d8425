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

#include <bit>
#include <cmath>

#include "internal.hpp"

namespace tangle::kernels::detail {

namespace {

cplx pauli_bilinear_scalar(const cplx* amps, std::size_t dim, std::uint32_t x_mask,
                           std::uint32_t z_mask) {
  double re = 0.0, im = 0.0;
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t partner = b ^ x_mask;
    const cplx p = amps[b] * amps[partner];
    if (std::popcount(static_cast<std::uint32_t>(partner) & z_mask) & 1u) {
      re -= p.real();
      im -= p.imag();
    } else {
      re += p.real();
      im += p.imag();
    }
  }
  return {re, im};
}

// Neumaier step.
inline void accumulate(double& sum, double& comp, double value) {
  const double t = sum + value;
  if (std::abs(sum) >= std::abs(value)) {
    comp += (sum - t) + value;
  } else {
    comp += (value - t) + sum;
  }
  sum = t;
}

cplx weighted_dot_scalar(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx p = w[i] * (a[i] * b[i]);
    accumulate(sr, cr, p.real());
    accumulate(si, ci, p.imag());
  }
  return {sr + cr, si + ci};
}

}  // namespace

const KernelTable kScalarTable{Isa::Scalar, "scalar", &pauli_bilinear_scalar,
                               &weighted_dot_scalar};

}  // namespace tangle::kernels::detail
