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
#include "tangle/measures.hpp"
#include "tangle/states.hpp"

using namespace tangle;

TEST_CASE("pure concurrence") {
  CHECK(concurrence_pure(get_state("bell")).pure_value == doctest::Approx(1.0));
  CHECK(concurrence_pure(make_state(2, {{"00", 1.0}})).pure_value < 1e-15);
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const PureState s = oracle::random_state(2, rng);
    const auto r = concurrence_pure(s);
    CHECK(std::abs(r.pure_value - r.closed_form) < 1e-12);
    CHECK(std::abs(r.squared_value - r.pure_value * r.pure_value) < 1e-12);
    CHECK(std::abs(concurrence_mixed(to_density(s)) - r.pure_value) < 1e-10);
  }
}

TEST_CASE("R matrix spectra") {
  const auto bell = r_spectrum(to_density(get_state("bell")));
  CHECK(bell[0] == doctest::Approx(1.0));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(bell[k]) < 1e-12);
  const auto mixed = r_spectrum(werner_state(0.0));
  for (double v : mixed) CHECK(v == doctest::Approx(1.0 / 16.0));
  const auto prod = r_spectrum(to_density(make_state(2, {{"01", 1.0}})));
  for (double v : prod) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("Werner concurrence") {
  for (double p : {0.0, 1.0 / 3.0, 0.6, 0.9, 1.0}) {
    CHECK(std::abs(concurrence_mixed(werner_state(p)) - oracle::werner_concurrence(p)) < 1e-9);
  }
  CHECK(concurrence_mixed(werner_state(0.9)) == doctest::Approx(0.85));
}

TEST_CASE("Q is a fixed multiple of R squared") {
  Rng rng(2);
  std::vector<cplx> scales;
  for (int t = 0; t < 30; ++t) {
    const DensityMatrix rho(2, oracle::random_density_matrix(4, rng));
    const auto r = check_q_equals_r2(rho);
    CHECK_FALSE(r.degenerate);
    CHECK(r.residual < 1e-8);
    scales.push_back(r.scale);
  }
  for (const auto& c : scales) CHECK(std::abs(c - scales.front()) < 1e-8);
  const auto bell = check_q_equals_r2(to_density(get_state("bell")));
  CHECK(std::abs(bell.scale - scales.front()) < 1e-8);
  const auto flat = check_q_equals_r2(werner_state(0.0));
  CHECK(flat.residual < 1e-12);
  const ComplexMatrix q = q_matrix(werner_state(0.0));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c) CHECK(std::abs(q(r, c)) < 1e-14);
  CHECK(check_q_equals_r2(to_density(make_state(2, {{"00", 1.0}}))).degenerate);
}

TEST_CASE("three-tangle") {
  const auto g = tangle3(get_state("ghz3"));
  CHECK(g.via_cayley == doctest::Approx(1.0));
  CHECK(g.agree(1e-12));
  const auto w = tangle3(get_state("w3"));
  CHECK(w.via_cayley < 1e-15);
  CHECK(w.agree(1e-12));
  const PureState prod = tensor(make_state(1, {{"0", 1.0}}), get_state("bell"));
  CHECK(tangle3(prod).via_f3_1 < 1e-15);
  CHECK(tangle3(prod).via_cayley < 1e-15);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) CHECK(tangle3(oracle::random_state(3, rng)).agree(1e-12));
  CHECK_THROWS(cayley_tangle(get_state("bell")));
}

TEST_CASE("classifier on the four-qubit states") {
  for (const char* name : {"phi1", "phi4", "phi5"}) {
    const auto r = classify_max_entanglement(get_state(name), 1e-9, 0x5eed, 32, name);
    CHECK_MESSAGE(r.condition_i, name);
    CHECK_MESSAGE(r.condition_i_strong, name);
    CHECK_MESSAGE(r.condition_ii_p2, name);
    CHECK_MESSAGE(r.condition_iii, name);
    CHECK(r.pairs.size() == 6);
    CHECK(r.not_evaluable_p == std::vector<int>{3});
    CHECK(r.subsets.size() == 14);
  }
}

TEST_CASE("classifier on product and five-qubit states") {
  const PureState prod = tensor(make_state(1, {{"0", 1.0}}), get_state("ghz3"));
  const auto p = classify_max_entanglement(prod);
  CHECK_FALSE(p.condition_i);
  REQUIRE_FALSE(p.condition_i_failures.empty());
  CHECK(p.condition_i_failures.front().qubits() == std::vector<int>{0});

  for (const char* name : {"psi2", "psi4", "psi5"}) {
    const auto r = classify_max_entanglement(get_state(name), 1e-9, 0x5eed, 32, name);
    CHECK_MESSAGE(r.condition_i, name);
    CHECK_MESSAGE(r.condition_ii_p2, name);
    CHECK_MESSAGE(r.condition_iii, name);
  }
  const auto psi6 = classify_max_entanglement(get_state("psi6"), 1e-9, 0x5eed, 32, "psi6");
  CHECK(psi6.condition_i);
  CHECK(psi6.condition_iii);
  CHECK_FALSE(psi6.condition_i_strong);
  CHECK(psi6.notes.size() == 2);
  const auto j = psi6.to_json();
  CHECK(j["state"] == "psi6");
  CHECK(j["condition_i"]["pass"] == true);
  CHECK(j["condition_ii_p2"]["pairs"].size() == 10);
  CHECK(j["condition_iii"]["pass"] == true);
}

TEST_CASE("classifier input range") {
  CHECK_THROWS(classify_max_entanglement(make_state(1, {{"0", 1.0}})));
}
