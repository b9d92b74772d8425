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

#include <span>
#include <string>
#include <vector>

#include "tangle/filter_ir.hpp"
#include "tangle/random.hpp"
#include "tangle/statevec.hpp"

namespace tangle {

/**
 * Named state as printed: integer-under-root coefficients sqrt(weight) on
 * each basis string and an overall prefactor 1/sqrt(prefactor_inv_sq).
 */
struct CatalogEntry {
  std::string name;
  int num_qubits = 0;
  /// Number of basis components in the canonical form.
  int length = 0;
  std::vector<std::pair<std::string, int>> components;  // (bits, coefficient squared)
  int prefactor_inv_sq = 1;
  std::string note;

  /// Squared norm of the printed expression, exactly.
  Rational raw_norm_sq() const;
  /// The printed vector without renormalization.
  PureState printed() const;
  /// Unit-normalized state; raw_norm_sq() of the result is the printed norm.
  PureState state() const;
};

class StateCatalog {
 public:
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<std::string> names() const;
  bool contains(const std::string& name) const;
  /// Throws StateError for unknown names.
  const CatalogEntry& entry(const std::string& name) const;

  static const StateCatalog& instance();

 private:
  StateCatalog();
  std::vector<CatalogEntry> entries_;
};

/**
 * Catalog state by name: bell, ghz2..ghz6, w3..w6, phi1, phi4, phi5,
 * psi2, psi4, psi5, psi6, xi2, xi4, xi5, xi6, xi7 (unit norm), xi7_printed
 * (printed prefactor, squared norm 9/8) and xi7_coef2.
 */
PureState get_state(const std::string& name);

/// Complex Gaussian amplitudes, normalized.
PureState random_pure(int num_qubits, Rng& rng);

/// Tensor product of independent random states with the given block sizes.
PureState random_product(std::span<const int> block_sizes, Rng& rng);

/**
 * Random product over an arbitrary grouping of qubits: each group gets an
 * independent random state. Groups must partition [0, q).
 */
PureState random_product_groups(const std::vector<std::vector<int>>& groups, int num_qubits,
                                Rng& rng);

/// All set partitions of [0, q) (restricted growth strings order).
std::vector<std::vector<std::vector<int>>> set_partitions(int num_qubits);

}  // namespace tangle
