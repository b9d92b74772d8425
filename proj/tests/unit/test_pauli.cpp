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

#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/pauli.hpp"

using namespace tangle;

namespace {

std::vector<std::uint8_t> codes_of(std::size_t word, int q) {
  std::vector<std::uint8_t> c(static_cast<std::size_t>(q));
  for (int j = q - 1; j >= 0; --j) {
    c[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(word & 3);
    word >>= 2;
  }
  return c;
}

}  // namespace

TEST_CASE("PauliString parsing and masks") {
  const PauliString p = PauliString::parse("XYZI");
  CHECK(p.to_string() == "XYZI");
  CHECK(p.x_mask() == 0b1100u);
  CHECK(p.z_mask() == 0b0110u);
  CHECK(p.y_count() == 1);
  CHECK(PauliString::parse("0123") == PauliString::parse("ixyz"));
  CHECK_THROWS(PauliString::parse("XQ"));
  CHECK_THROWS(PauliString::parse(""));
}

TEST_CASE("apply matches the matrix definition") {
  const PureState ab(1, {cplx(0.6, 0.0), cplx(0.0, 0.8)});
  const PureState y = apply(PauliString::parse("Y"), ab);
  CHECK(std::abs(y[0] - cplx(0, -1) * ab[1]) < 1e-15);
  CHECK(std::abs(y[1] - cplx(0, 1) * ab[0]) < 1e-15);

  const PureState bell = make_state(2, {{"00", 1.0}, {"11", 1.0}});
  const PureState xx = apply(PauliString::parse("XX"), bell);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(xx[i] - bell[i]) < 1e-15);

  const PureState psi = make_state(2, {{"01", 1.0}, {"10", 1.0}});
  const PureState zz = apply(PauliString::parse("ZZ"), psi);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(zz[i] + psi[i]) < 1e-15);

  CHECK_THROWS_AS(apply(PauliString::parse("X"), bell), StateError);
}

TEST_CASE("antilinear expectation examples") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const PureState s = oracle::random_state(1, rng);
    CHECK(std::abs(antilinear_expect(s, PauliString::parse("Y"))) < 1e-14);
  }
  const PureState zero2 = make_state(2, {{"00", 1.0}});
  CHECK(std::abs(antilinear_expect(zero2, PauliString::parse("II")) - 1.0) < 1e-15);
  const PureState bell = make_state(2, {{"00", 1.0}, {"11", 1.0}});
  CHECK(std::abs(antilinear_expect(bell, PauliString::parse("YY")) + 1.0) < 1e-15);
}

TEST_CASE("antilinear expectation against the dense oracle, all strings up to q=3") {
  Rng rng(8);
  for (int q = 1; q <= 3; ++q) {
    const PureState s = oracle::random_state(q, rng);
    for (std::size_t w = 0; w < (std::size_t{1} << (2 * q)); ++w) {
      const auto codes = codes_of(w, q);
      const cplx ref = oracle::dense_expect(s, codes);
      for (auto isa : kernels::available_isas()) {
        CHECK(std::abs(antilinear_expect(s, PauliString(codes), isa) - ref) < 1e-12);
      }
    }
  }
}

TEST_CASE("antilinear expectation against the dense oracle, sampled at q=4..6") {
  Rng rng(12);
  for (int q = 4; q <= 6; ++q) {
    const PureState s = oracle::random_state(q, rng);
    for (int t = 0; t < 40; ++t) {
      const auto codes = codes_of(rng.next_u64(), q);
      CHECK(std::abs(antilinear_expect(s, PauliString(codes)) - oracle::dense_expect(s, codes)) <
            1e-12);
    }
  }
}

TEST_CASE("single-qubit comb2 vanishes") {
  CHECK(verify_comb2(make_state(1, {{"0", 1.0}})) < 1e-15);
  const PureState s(1, {cplx(1, 2) / std::sqrt(15.0), cplx(3, -1) / std::sqrt(15.0)});
  CHECK(verify_comb2(s) < 1e-15);
  Rng rng(21);
  for (int t = 0; t < 1000; ++t) CHECK(verify_comb2(oracle::random_state(1, rng)) < 1e-12);
  CHECK_THROWS_AS(verify_comb2(make_state(2, {{"00", 1.0}})), StateError);
}

TEST_CASE("expectation cache") {
  Rng rng(2);
  const PureState s = oracle::random_state(3, rng);
  ExpectationCache cache(s);
  const PauliString p = PauliString::parse("XZY");
  const cplx a = antilinear_expect(s, p, cache);
  const cplx b = antilinear_expect(s, p, cache);
  CHECK(a == b);
  CHECK(cache.misses() == 1);
  CHECK(cache.hits() == 1);
  CHECK(cache.size() == 1);
  const PureState other = oracle::random_state(3, rng);
  CHECK_THROWS_AS(antilinear_expect(other, p, cache), StateError);
  cache.rebind(other);
  CHECK(cache.size() == 0);
  CHECK(antilinear_expect(other, p, cache) == antilinear_expect(other, p));
}
