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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tangle/kernels.hpp"

using namespace tangle;
using namespace tangle::kernels;

namespace {

double scale_of(const std::vector<cplx>& a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return std::max(s, 1e-300);
}

}  // namespace

TEST_CASE("isa names") {
  CHECK(parse_isa("scalar") == Isa::Scalar);
  CHECK(parse_isa("avx2") == Isa::Avx2);
  CHECK(isa_name(Isa::Scalar) == "scalar");
  CHECK_THROWS(parse_isa("sse9"));
  CHECK(available(Isa::Scalar));
  CHECK(table(Isa::Scalar).isa == Isa::Scalar);
  CHECK(available(best_isa()));
}

TEST_CASE("pauli_bilinear: vector kernels match the scalar reference") {
  Rng rng(17);
  for (auto isa : available_isas()) {
    if (isa == Isa::Scalar) continue;
    const KernelTable& k = table(isa);
    const KernelTable& ref = table(Isa::Scalar);
    for (int q = 1; q <= 7; ++q) {
      const std::size_t dim = std::size_t{1} << q;
      std::vector<cplx> a(dim);
      for (auto& x : a) x = rng.complex_normal();
      for (std::uint32_t x = 0; x < dim; ++x) {
        for (std::uint32_t z = 0; z < dim; z += (q > 4 ? 5 : 1)) {
          const cplx r = ref.pauli_bilinear(a.data(), dim, x, z);
          const cplx v = k.pauli_bilinear(a.data(), dim, x, z);
          CHECK(std::abs(r - v) < 1e-13 * scale_of(a));
        }
      }
    }
  }
}

TEST_CASE("weighted_dot: vector kernels match the scalar reference") {
  Rng rng(19);
  for (auto isa : available_isas()) {
    if (isa == Isa::Scalar) continue;
    for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 9u, 27u, 81u, 243u, 1000u}) {
      std::vector<double> w(n);
      std::vector<cplx> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = (i % 3 == 0) ? -1.0 : 1.0;
        a[i] = rng.complex_normal();
        b[i] = rng.complex_normal();
      }
      const cplx r = table(Isa::Scalar).weighted_dot(w.data(), a.data(), b.data(), n);
      const cplx v = table(isa).weighted_dot(w.data(), a.data(), b.data(), n);
      CHECK(std::abs(r - v) < 1e-13 * (1.0 + static_cast<double>(n)));
    }
  }
}

TEST_CASE("weighted_dot compensates cancellation") {
  // 1e16 + 1 - 1e16 summed in order loses the 1 without compensation
  const std::vector<double> w = {1.0, 1.0, -1.0};
  const std::vector<cplx> a = {1e16, 1.0, 1e16};
  const std::vector<cplx> b = {1.0, 1.0, 1.0};
  for (auto isa : available_isas()) {
    const cplx r = table(isa).weighted_dot(w.data(), a.data(), b.data(), 3);
    CHECK(r.real() == 1.0);
  }
}
