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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangle/eval.hpp"
#include "tangle/filter_ir.hpp"
#include "tangle/random.hpp"
#include "tangle/statevec.hpp"

namespace tangle {

using Mat2 = std::array<cplx, 4>;  // row-major [a b; c d]

/// One 2x2 matrix per qubit.
struct LocalOperator {
  enum class Kind { DetOne, Unitary };

  Kind kind = Kind::DetOne;
  std::vector<Mat2> factors;

  static LocalOperator identity(int num_qubits, Kind kind = Kind::DetOne);
  int num_qubits() const { return static_cast<int>(factors.size()); }
  /// Checks the kind invariant to `tol` on every factor.
  bool satisfies_invariant(double tol = 1e-12) const;
};

cplx det(const Mat2& m);

/**
 * Entries uniform in the complex unit square, resampled while |det| < 0.1,
 * then divided by the principal square root of the determinant.
 */
LocalOperator random_det_one(int num_qubits, Rng& rng);

/// Gram-Schmidt of two complex Gaussian vectors, phase-fixed to det = 1.
LocalOperator random_local_unitary(int num_qubits, Rng& rng);

/// (A_0 (x) ... (x) A_{q-1}) |s>; the norm is not restored.
PureState apply_local(const LocalOperator& op, const PureState& s);

struct CheckReport {
  std::string filter;
  std::string check;
  std::size_t trials = 0;
  double worst_deviation = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  bool pass = false;
  /// Trial index of the worst case.
  std::size_t worst_trial = 0;

  nlohmann::json to_json() const;
};

/**
 * Deviation of `transformed` from `reference` relative to the scale of the
 * sum that produced them: |t - r| / max(|r|, ||s'||^(2n)) with s' the
 * transformed state and 2n the degree.
 */
double invariance_deviation(cplx reference, cplx transformed, double transformed_norm_sq,
                            std::size_t degree);

/**
 * eval(f, A s) against eval(f, s) for `trials` random det-one operators A;
 * trial t draws from Rng(seed ^ t). PASS iff the worst deviation < tol.
 */
CheckReport check_sl_invariance(const FilterDef& f, const PureState& s, std::size_t trials,
                                std::uint64_t seed, double tol = 1e-8,
                                const EvalOptions& opts = {});

/// Same check with random local unitaries and renormalized moduli.
CheckReport check_lu_invariance(const FilterDef& f, const PureState& s, std::size_t trials,
                                std::uint64_t seed, double tol = 1e-8,
                                const EvalOptions& opts = {});

/**
 * |eval| on random product states. Trials cycle through every set partition
 * of the qubits into at least two groups (for q = 1, arbitrary states).
 */
CheckReport check_product_vanishing(const FilterDef& f, std::size_t trials, std::uint64_t seed,
                                    double tol = 1e-10, const EvalOptions& opts = {});

/// eval(f, lambda s) against conj(lambda)^(2n) eval(f, s), relative.
CheckReport check_homogeneity(const FilterDef& f, const PureState& s, std::size_t trials,
                              std::uint64_t seed, double tol = 1e-10,
                              const EvalOptions& opts = {});

struct PermutationReport {
  std::string filter;
  std::size_t permutations = 0;
  std::vector<cplx> distinct_values;
  double tolerance = 0.0;
  /// Set only when single-valuedness is asserted (F2_2, F3_2).
  bool asserted = false;
  bool pass = true;

  nlohmann::json to_json() const;
};

/// Evaluates f on all q! qubit permutations of s and groups values within tol.
PermutationReport check_permutation_invariance(const FilterDef& f, const PureState& s,
                                               double tol = 1e-10, const EvalOptions& opts = {});

}  // namespace tangle
