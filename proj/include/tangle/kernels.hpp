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
#include <cstdint>
#include <string_view>
#include <vector>

namespace tangle::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

/**
 * Inner loops shared by the Pauli and contraction layers. The scalar table
 * is the reference; vector tables must agree with it to rounding.
 */
struct KernelTable {
  Isa isa;
  const char* name;

  /// sum_b (-1)^popcount((b ^ x) & z) * a[b] * a[b ^ x], over b < dim.
  cplx (*pauli_bilinear)(const cplx* amps, std::size_t dim, std::uint32_t x_mask,
                         std::uint32_t z_mask);

  /// Compensated sum_i w[i] * a[i] * b[i].
  cplx (*weighted_dot)(const double* w, const cplx* a, const cplx* b, std::size_t n);
};

bool available(Isa isa);
std::vector<Isa> available_isas();

/// Throws std::invalid_argument when `isa` is not usable on this machine.
const KernelTable& table(Isa isa);

/**
 * Best ISA for this CPU, decided once per process. Setting the environment
 * variable TANGLE_KERNEL=scalar pins the reference kernels.
 */
Isa best_isa();

std::string_view isa_name(Isa isa);
/// Accepts "scalar", "avx2" and "auto".
Isa parse_isa(std::string_view name);

}  // namespace tangle::kernels
