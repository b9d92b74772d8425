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
#include <set>

#include "oracles.hpp"
#include "tangle/eval.hpp"
#include "tangle/states.hpp"

using namespace tangle;

namespace {

bool close_rel(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("block tensor examples") {
  const PureState ghz3 = get_state("ghz3");
  ExpectationCache cache(ghz3);
  const BlockTensor t = block_tensor(catalog().get("F3_1"), 0, ghz3, cache);
  REQUIRE(t.rank() == 1);
  REQUIRE(t.data.size() == 3);
  CHECK(std::abs(t.data[0]) < 1e-15);
  CHECK(std::abs(t.data[1] + 1.0) < 1e-15);
  CHECK(std::abs(t.data[2]) < 1e-15);

  const PureState bell = get_state("bell");
  ExpectationCache bc(bell);
  const BlockTensor s = block_tensor(catalog().get("F2_1"), 0, bell, bc);
  CHECK(s.rank() == 0);
  CHECK(std::abs(s.data.at(0) + 1.0) < 1e-15);
}

TEST_CASE("block tensors agree with the dense oracle") {
  Rng rng(31);
  for (const char* name : {"F2_2", "F3_1", "F3_2"}) {
    const FilterDef& f = catalog().get(name);
    const PureState s = oracle::random_state(f.num_qubits, rng);
    ExpectationCache cache(s);
    for (std::size_t b = 0; b < f.order(); ++b) {
      const BlockTensor t = block_tensor(f, b, s, cache);
      // walk all index tuples
      std::vector<std::uint8_t> vals(t.rank(), 0);
      for (std::size_t flat = 0; flat < t.data.size(); ++flat) {
        std::size_t rem = flat;
        for (std::size_t k = t.rank(); k-- > 0;) {
          vals[k] = kContractedValues[rem % 3];
          rem /= 3;
        }
        std::vector<std::uint8_t> codes;
        for (const auto& slot : f.blocks[b].slots) {
          if (!slot.is_label()) {
            codes.push_back(slot.code);
            continue;
          }
          std::size_t k = 0;
          while (t.labels[k] != slot.label) ++k;
          codes.push_back(vals[k]);
        }
        CHECK(std::abs(t.at(vals) - oracle::dense_expect(s, codes)) < 1e-12);
        CHECK(t.at(vals) == t.data[flat]);
      }
    }
  }
}

TEST_CASE("hand-checked values") {
  CHECK(std::abs(eval_brute(catalog().get("F2_2"), get_state("bell")) - 1.0) < 1e-14);
  CHECK(std::abs(eval_brute(catalog().get("F4_1"), get_state("phi1"))) == doctest::Approx(1.0));
  CHECK(std::abs(eval_brute(catalog().get("F4_1"), get_state("phi5"))) ==
        doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(std::abs(eval_planned(catalog().get("F4_3"), get_state("phi4"))) == doctest::Approx(1.0));
  CHECK(std::abs(eval_planned(catalog().get("F5_1"), get_state("psi6"))) ==
        doctest::Approx(3.0 * std::sqrt(3.0) / 32.0).epsilon(1e-12));
  CHECK(measure(catalog().get("F2_1"), get_state("bell")).modulus == doctest::Approx(1.0));
  CHECK(measure(catalog().get("F3_1"), get_state("ghz3")).modulus == doctest::Approx(1.0));
  CHECK(measure(catalog().get("F3_1"), get_state("w3")).modulus < 1e-14);
  CHECK(measure(catalog().get("F4_1"), get_state("phi1")).degree == 6);
}

TEST_CASE("naive four-valued sum agrees with brute force") {
  Rng rng(41);
  for (const auto& f : catalog().entries()) {
    if (f.labels().size() > 6) continue;
    const PureState s = oracle::random_state(f.num_qubits, rng);
    CHECK(close_rel(oracle::naive_filter(f, s), eval_brute(f, s), 1e-11));
  }
  for (int t = 0; t < 40; ++t) {
    const FilterDef f = oracle::random_filter(rng, 3, 3);
    const PureState s = oracle::random_state(f.num_qubits, rng);
    CHECK(close_rel(oracle::naive_filter(f, s), eval_brute(f, s), 1e-11));
  }
}

TEST_CASE("plan shapes") {
  const ContractionPlan p21 = make_plan(catalog().get("F2_1"));
  CHECK(p21.steps.empty());
  const ContractionPlan p53 = make_plan(catalog().get("F5_3"));
  CHECK(p53.steps.size() == 5);
  CHECK(p53.estimated_cost < std::pow(3.0, 9) * 6);
  CHECK(p53.brute_force_cost == std::pow(3.0, 9) * 6);
  const ContractionPlan p61 = make_plan(catalog().get("F6_1"));
  CHECK(p61.steps.size() == 4);
  std::multiset<std::string> consumed;
  for (const auto& st : p61.steps)
    for (const auto& l : st.contracted) consumed.insert(l);
  CHECK(consumed.size() == 6);
  for (const auto& l : catalog().get("F6_1").labels()) CHECK(consumed.count(l) == 1);
  CHECK(p61.steps.back().result_labels.empty());
}

TEST_CASE("planned equals brute on every catalog pair") {
  const auto& states = StateCatalog::instance();
  for (const auto& f : catalog().entries()) {
    for (const auto& e : states.entries()) {
      if (e.num_qubits != f.num_qubits) continue;
      const PureState s = get_state(e.name);
      CHECK_MESSAGE(close_rel(eval_planned(f, s), eval_brute(f, s), 1e-10), f.name, " ", e.name);
    }
  }
}

TEST_CASE("planned equals brute on random filters and states") {
  Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    const FilterDef f = oracle::random_filter(rng, 5, 4);
    const PureState s = oracle::random_state(f.num_qubits, rng);
    CHECK(close_rel(eval_planned(f, s), eval_brute(f, s), 1e-10));
  }
}

TEST_CASE("kernel choice and worker count") {
  Rng rng(61);
  const FilterDef& f = catalog().get("F5_4");
  const PureState s = oracle::random_state(5, rng);
  const cplx ref = eval_planned(f, s, {kernels::Isa::Scalar, 1});
  for (auto isa : kernels::available_isas()) {
    for (unsigned w : {1u, 2u, 3u, 8u}) {
      const EvalOptions o{isa, w};
      CHECK(close_rel(eval_planned(f, s, o), ref, 1e-12));
      CHECK(close_rel(eval_brute(f, s, o), ref, 1e-10));
      if (isa == kernels::Isa::Scalar) CHECK(eval_planned(f, s, o) == ref);
    }
  }
  CHECK(eval_brute(f, s, {kernels::Isa::Scalar, 4}) == eval_brute(f, s, {kernels::Isa::Scalar, 4}));
}

TEST_CASE("homogeneity of degree 2n") {
  Rng rng(71);
  for (const char* name : {"F2_1", "F3_2", "F4_2", "F6_1"}) {
    const FilterDef& f = catalog().get(name);
    const PureState s = oracle::random_state(f.num_qubits, rng);
    const cplx lambda(0.7, -0.4);
    const cplx lhs = eval_planned(f, s.scaled(lambda));
    const cplx rhs = std::pow(std::conj(lambda), static_cast<int>(f.degree())) * eval_planned(f, s);
    CHECK(close_rel(lhs, rhs, 1e-12));
  }
}

TEST_CASE("qubit count mismatch") {
  CHECK_THROWS_AS(eval_planned(catalog().get("F4_1"), get_state("ghz3")), EvalError);
  CHECK_THROWS_AS(eval_brute(catalog().get("F4_1"), get_state("ghz3")), EvalError);
}
