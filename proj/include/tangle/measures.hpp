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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangle/eval.hpp"
#include "tangle/statevec.hpp"

namespace tangle {

struct ConcurrenceReport {
  double pure_value = 0.0;     // |<F2_1>_C|
  double squared_value = 0.0;  // |<F2_2>_C|
  double closed_form = 0.0;    // 2 |a00 a11 - a01 a10|
  std::optional<double> mixed_value;

  nlohmann::json to_json() const;
};

/// Two-qubit pure concurrence through both filter forms.
ConcurrenceReport concurrence_pure(const PureState& s, const EvalOptions& opts = {});

/// sqrt(rho) (Y(x)Y) rho* (Y(x)Y) sqrt(rho).
ComplexMatrix r_matrix(const DensityMatrix& rho);
/// Eigenvalues of R, descending, with values above -1e-10 clipped to 0.
std::vector<double> r_spectrum(const DensityMatrix& rho);

/// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) over the R spectrum.
double concurrence_mixed(const DensityMatrix& rho);

/**
 * sqrt(rho) (s_mu s_nu) rho* (s_ka s_la) rho (s^mu s^nu) rho* (s^ka s^la) sqrt(rho)
 * contracted with the metric on all four index pairs.
 */
ComplexMatrix q_matrix(const DensityMatrix& rho);

struct QRelationReport {
  cplx scale;             // least-squares c in Q ~ c R^2
  double residual = 0.0;  // ||Q - c R^2||_F / ||R^2||_F
  bool scale_is_one = false;
  bool degenerate = false;  // R^2 vanishes; scale undefined

  nlohmann::json to_json() const;
};

QRelationReport check_q_equals_r2(const DensityMatrix& rho, double tol = 1e-8);

/// Werner state p |Psi-><Psi-| + (1 - p) I/4.
DensityMatrix werner_state(double p);

struct Tangle3Report {
  double via_f3_1 = 0.0;
  double via_f3_2 = 0.0;
  double via_cayley = 0.0;

  bool agree(double tol) const;
  nlohmann::json to_json() const;
};

/// 4 |d1 - 2 d2 + 4 d3| from the Cayley hyperdeterminant of the amplitudes.
double cayley_tangle(const PureState& s);

Tangle3Report tangle3(const PureState& s, const EvalOptions& opts = {});

struct SubsetResult {
  QubitSubset subset;
  int rank = 0;
  std::vector<double> nonzero_spectrum;
};

struct PairConcurrence {
  QubitSubset subset;
  double concurrence = 0.0;
};

/**
 * Scan of the maximal-entanglement conditions. "Maximally mixed" is read as a
 * flat nonzero spectrum (every nonzero eigenvalue equal to 1/rank).
 */
struct MaxEntReport {
  std::string state;
  int num_qubits = 0;
  double tolerance = 0.0;

  // (i): every reduction of rank <= 2 has nonzero eigenvalues 1/2.
  bool condition_i = false;
  std::vector<QubitSubset> condition_i_failures;
  // (i-strong): every proper reduction has a flat nonzero spectrum.
  bool condition_i_strong = false;
  std::vector<QubitSubset> condition_i_strong_failures;
  // (ii) at p = 2 via the mixed concurrence; p >= 3 is not evaluable.
  bool condition_ii_p2 = false;
  std::vector<PairConcurrence> pairs;
  std::vector<int> not_evaluable_p;
  // (iii): (i) and (ii) unchanged under random phases on the components.
  bool condition_iii = false;
  std::size_t phase_trials = 0;

  std::vector<SubsetResult> subsets;  // every proper subset, once
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

MaxEntReport classify_max_entanglement(const PureState& s, double tol = 1e-9,
                                       std::uint64_t seed = 0x5eed, std::size_t phase_trials = 32,
                                       const std::string& name = "", double rank_tol = 1e-10);

}  // namespace tangle
