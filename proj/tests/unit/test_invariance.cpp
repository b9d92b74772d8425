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
#include "tangle/filter_parser.hpp"
#include "tangle/invariance.hpp"
#include "tangle/states.hpp"

using namespace tangle;

namespace {

FilterDef parse_single(const char* text) { return parse_filters(text).at(0); }

}  // namespace

TEST_CASE("random det-one operators") {
  Rng rng(42);
  const LocalOperator a = random_det_one(4, rng);
  CHECK(a.num_qubits() == 4);
  CHECK(a.satisfies_invariant());
  for (const auto& m : a.factors) CHECK(std::abs(det(m) - 1.0) < 1e-12);
  Rng again(42);
  const LocalOperator b = random_det_one(4, again);
  for (std::size_t k = 0; k < 4; ++k) CHECK(a.factors[k] == b.factors[k]);
  CHECK(LocalOperator::identity(3).satisfies_invariant());
  CHECK(LocalOperator::identity(3, LocalOperator::Kind::Unitary).satisfies_invariant());
}

TEST_CASE("random local unitaries") {
  Rng rng(5);
  const LocalOperator u = random_local_unitary(3, rng);
  CHECK(u.satisfies_invariant());
  const PureState s = oracle::random_state(3, rng);
  CHECK(apply_local(u, s).norm_sq() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("apply_local examples") {
  Rng rng(6);
  const PureState s = oracle::random_state(3, rng);
  const PureState same = apply_local(LocalOperator::identity(3), s);
  for (std::size_t i = 0; i < s.dim(); ++i) CHECK(same[i] == s[i]);

  LocalOperator x = LocalOperator::identity(2);
  x.factors[0] = {0.0, 1.0, 1.0, 0.0};
  x.kind = LocalOperator::Kind::Unitary;
  const PureState flipped = apply_local(x, make_state(2, {{"00", 1.0}}));
  CHECK(flipped[2] == cplx(1.0));

  const LocalOperator a = random_det_one(2, rng);
  CHECK(std::abs(apply_local(a, get_state("bell")).norm_sq() - 1.0) > 1e-6);
}

TEST_CASE("det-one invariance passes") {
  CHECK(check_sl_invariance(catalog().get("F2_1"), get_state("bell"), 200, 1).pass);
  CHECK(check_sl_invariance(catalog().get("F4_1"), get_state("phi5"), 200, 2).pass);
  Rng rng(3);
  const auto r = check_sl_invariance(catalog().get("F3_1"), oracle::random_state(3, rng), 200, 3);
  CHECK(r.pass);
  CHECK(r.trials == 200);
  CHECK(r.check == "slocc");
}

TEST_CASE("det-one invariance catches a non-invariant operator") {
  const auto f = parse_single("filter X { qubits: 2; prefactor: 1/1; block [x, x] }");
  Rng rng(4);
  const auto r = check_sl_invariance(f, oracle::random_state(2, rng), 20, 4);
  CHECK_FALSE(r.pass);
}

TEST_CASE("unitary invariance of moduli") {
  Rng rng(8);
  CHECK(check_lu_invariance(catalog().get("F5_2"), oracle::random_state(5, rng), 50, 8).pass);
}

TEST_CASE("product vanishing") {
  CHECK(check_product_vanishing(catalog().get("F4_1"), 60, 1).pass);
  CHECK(check_product_vanishing(catalog().get("F2_1"), 50, 2).pass);
  CHECK(check_product_vanishing(catalog().get("F6_2"), 203, 3).pass);
  CHECK(check_product_vanishing(catalog().get("comb2"), 20, 4).pass);
  const auto norm = parse_single("filter N { qubits: 2; prefactor: 1/1; block [id, id] }");
  CHECK_FALSE(check_product_vanishing(norm, 20, 5).pass);
}

TEST_CASE("product states from set partitions") {
  CHECK(set_partitions(4).size() == 15);
  Rng rng(9);
  const std::vector<int> sizes = {2, 2};
  const PureState p = random_product(sizes, rng);
  CHECK(std::abs(eval_planned(catalog().get("F4_1"), p)) < 1e-12);
}

TEST_CASE("homogeneity check") {
  Rng rng(10);
  CHECK(check_homogeneity(catalog().get("F4_3"), oracle::random_state(4, rng), 50, 10).pass);
}

TEST_CASE("permutation behaviour") {
  Rng rng(11);
  const auto r32 = check_permutation_invariance(catalog().get("F3_2"), oracle::random_state(3, rng));
  CHECK(r32.permutations == 6);
  CHECK(r32.asserted);
  CHECK(r32.pass);
  CHECK(r32.distinct_values.size() == 1);
  const auto r22 = check_permutation_invariance(catalog().get("F2_2"), oracle::random_state(2, rng));
  CHECK(r22.distinct_values.size() == 1);
  const auto r41 = check_permutation_invariance(catalog().get("F4_1"), oracle::random_state(4, rng));
  CHECK(r41.permutations == 24);
  CHECK_FALSE(r41.asserted);
  CHECK(r41.pass);
  CHECK(r41.distinct_values.size() >= 1);
}

TEST_CASE("reports serialize") {
  const auto r = check_product_vanishing(catalog().get("F2_1"), 5, 1);
  const auto j = r.to_json();
  CHECK(j["filter"] == "F2_1");
  CHECK(j["seed"] == 1);
  CHECK(j["trials"] == 5);
}
