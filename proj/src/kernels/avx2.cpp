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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>
#include <cmath>

#include "internal.hpp"

namespace tangle::kernels::detail {

namespace {

// Lanes hold two complex numbers: [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d c) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d c_swap = _mm256_permute_pd(c, 0x5);
  return _mm256_fmaddsub_pd(a_re, c, _mm256_mul_pd(a_im, c_swap));
}

inline double sign_of(std::size_t partner, std::uint32_t z_mask) {
  return (std::popcount(static_cast<std::uint32_t>(partner) & z_mask) & 1u) ? -1.0 : 1.0;
}

cplx pauli_bilinear_avx2(const cplx* amps, std::size_t dim, std::uint32_t x_mask,
                         std::uint32_t z_mask) {
  const double* base = reinterpret_cast<const double*>(amps);
  const bool swap_pair = (x_mask & 1u) != 0;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t b = 0; b < dim; b += 2) {
    const std::size_t p0 = b ^ x_mask;
    const __m256d va = _mm256_loadu_pd(base + 2 * b);
    __m256d vc = _mm256_loadu_pd(base + 2 * (p0 & ~std::size_t{1}));
    if (swap_pair) vc = _mm256_permute4x64_pd(vc, 0x4E);
    const double s0 = sign_of(p0, z_mask);
    const double s1 = sign_of(p0 ^ 1u, z_mask);
    const __m256d sign = _mm256_set_pd(s1, s1, s0, s0);
    acc = _mm256_fmadd_pd(sign, cmul(va, vc), acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return {lanes[0] + lanes[2], lanes[1] + lanes[3]};
}

inline void accumulate(double& sum, double& comp, double value) {
  const double t = sum + value;
  if (std::abs(sum) >= std::abs(value)) {
    comp += (sum - t) + value;
  } else {
    comp += (value - t) + sum;
  }
  sum = t;
}

cplx weighted_dot_avx2(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d weight = _mm256_set_pd(w[i + 1], w[i + 1], w[i], w[i]);
    const __m256d prod = _mm256_mul_pd(
        weight, cmul(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
    const __m256d t = _mm256_add_pd(sum, prod);
    const __m256d big_sum = _mm256_cmp_pd(_mm256_and_pd(sum, abs_mask),
                                          _mm256_and_pd(prod, abs_mask), _CMP_GE_OQ);
    const __m256d if_sum = _mm256_add_pd(_mm256_sub_pd(sum, t), prod);
    const __m256d if_prod = _mm256_add_pd(_mm256_sub_pd(prod, t), sum);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(if_prod, if_sum, big_sum));
    sum = t;
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);
  double sr = s[0], cr = c[0] + c[2], si = s[1], ci = c[1] + c[3];
  accumulate(sr, cr, s[2]);
  accumulate(si, ci, s[3]);
  for (; i < n; ++i) {
    const cplx p = w[i] * (a[i] * b[i]);
    accumulate(sr, cr, p.real());
    accumulate(si, ci, p.imag());
  }
  return {sr + cr, si + ci};
}

}  // namespace

const KernelTable kAvx2Table{Isa::Avx2, "avx2", &pauli_bilinear_avx2, &weighted_dot_avx2};

}  // namespace tangle::kernels::detail
