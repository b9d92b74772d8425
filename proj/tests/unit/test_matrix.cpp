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

#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/matrix.hpp"

using namespace tangle;

namespace {

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = rng.normal();
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = rng.complex_normal();
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("kron dimensions and entries") {
  const auto x = oracle::sigma(1);
  const auto z = oracle::sigma(3);
  const ComplexMatrix k = kron(x, z);
  CHECK(k.dim() == 4);
  CHECK(k(0, 2) == cplx(1.0));
  CHECK(k(1, 3) == cplx(-1.0));
  CHECK(k(0, 0) == cplx(0.0));
}

TEST_CASE("jacobi: 2x2 against the quadratic formula") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix m = random_hermitian(2, rng);
    const auto e = hermitian_eigen(m);
    const auto [hi, lo] = oracle::eig2(m);
    CHECK(e.values[0] == doctest::Approx(hi).epsilon(1e-12));
    CHECK(std::abs(e.values[1] - lo) < 1e-12 * std::max(1.0, std::abs(lo)));
  }
}

TEST_CASE("jacobi: reconstruction and orthonormality up to dimension 64") {
  Rng rng(3);
  for (std::size_t dim : {1u, 3u, 4u, 8u, 16u, 32u, 64u}) {
    const ComplexMatrix m = random_hermitian(dim, rng);
    const auto e = hermitian_eigen(m);
    REQUIRE(e.values.size() == dim);
    for (std::size_t k = 1; k < dim; ++k) CHECK(e.values[k - 1] >= e.values[k]);
    const ComplexMatrix rebuilt = e.vectors * ComplexMatrix::diagonal(e.values) * e.vectors.adjoint();
    CHECK(rebuilt.max_abs_diff(m) < 1e-10);
    const ComplexMatrix gram = e.vectors.adjoint() * e.vectors;
    CHECK(gram.max_abs_diff(ComplexMatrix::identity(dim)) < 1e-12);
  }
}

TEST_CASE("jacobi: simple spectra") {
  const std::vector<double> half = {0.5, 0.5};
  CHECK(hermitian_eigen(ComplexMatrix::diagonal(half)).values == half);
  const std::vector<double> ghz = {0.5, 0.0, 0.0, 0.5};
  const auto e = hermitian_eigen(ComplexMatrix::diagonal(ghz)).values;
  CHECK(e[0] == 0.5);
  CHECK(e[1] == 0.5);
  CHECK(e[2] == 0.0);
  CHECK(e[3] == 0.0);
}

TEST_CASE("jacobi rejects non-Hermitian input") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigen(m), StateError);
}

TEST_CASE("psd_sqrt squares back") {
  Rng rng(5);
  for (std::size_t dim : {2u, 4u, 8u}) {
    const ComplexMatrix rho = oracle::random_density_matrix(dim, rng);
    const ComplexMatrix root = psd_sqrt(rho);
    CHECK((root * root).max_abs_diff(rho) < 1e-12);
    CHECK(root.max_abs_diff(root.adjoint()) < 1e-13);
  }
  const std::vector<double> neg = {1.0, -0.5};
  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal(neg)), StateError);
}

TEST_CASE("frobenius inner product") {
  const auto y = oracle::sigma(2);
  CHECK(std::abs(frobenius_inner(y, y) - cplx(2.0)) < 1e-15);
  CHECK(std::abs(frobenius_inner(oracle::sigma(1), oracle::sigma(3))) < 1e-15);
}
