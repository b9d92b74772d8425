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
#include <string>
#include <vector>

#include "tangle/filter_ir.hpp"
#include "tangle/kernels.hpp"
#include "tangle/pauli.hpp"
#include "tangle/statevec.hpp"

namespace tangle {

class EvalError : public Error {
 public:
  using Error::Error;
};

struct EvalOptions {
  kernels::Isa isa = kernels::best_isa();
  /// Worker threads; 1 keeps brute-force sums bit-stable.
  unsigned workers = 1;
};

/**
 * Antilinear expectations of one block over its free labels. Axis k belongs
 * to labels[k] and runs over index values (0, 1, 3); storage is row-major.
 * The metric is not applied here.
 */
struct BlockTensor {
  std::size_t block = 0;
  std::vector<std::string> labels;
  std::vector<cplx> data;

  std::size_t rank() const { return labels.size(); }
  /// Entry for index values (each in {0, 1, 3}) in label order.
  cplx at(std::span<const std::uint8_t> values) const;
};

struct MergeStep {
  std::size_t lhs = 0;  // tensor ids; block tensors are 0..n-1, step k yields n+k
  std::size_t rhs = 0;
  std::vector<std::string> contracted;
  std::vector<std::string> result_labels;
  double cost = 0.0;  // 3^(|result| + |contracted|)
};

struct ContractionPlan {
  std::size_t num_blocks = 0;
  std::vector<MergeStep> steps;
  double estimated_cost = 0.0;
  /// 3^L * n: block reads of the brute-force sum.
  double brute_force_cost = 0.0;
};

BlockTensor block_tensor(const FilterDef& f, std::size_t block, const PureState& s,
                         ExpectationCache& cache, kernels::Isa isa = kernels::best_isa());

/**
 * prefactor * sum over label assignments in {0,1,3}^L of
 * prod_labels g(v) * prod_blocks <psi|block(v)|psi*>, summed lexicographically.
 */
cplx eval_brute(const FilterDef& f, const PureState& s, const EvalOptions& opts = {});

/// Greedy pairwise merge order, cheapest step first.
ContractionPlan make_plan(const FilterDef& f);

cplx eval_planned(const FilterDef& f, const PureState& s, const EvalOptions& opts = {});
cplx eval_planned(const FilterDef& f, const ContractionPlan& plan, const PureState& s,
                  const EvalOptions& opts = {});

struct Measurement {
  cplx value;
  double modulus = 0.0;
  std::size_t degree = 0;
};

/// |<F>_C| with the complex value and homogeneous degree 2n.
Measurement measure(const FilterDef& f, const PureState& s, const EvalOptions& opts = {});

}  // namespace tangle
