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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/kernels.hpp"
#include "tangle/statevec.hpp"

namespace tangle {

/**
 * Tensor product of Pauli matrices sigma_0 (identity), sigma_1 = x,
 * sigma_2 = y, sigma_3 = z, one code per qubit. Applied as a bit flip by the
 * X mask together with a sign from the Z mask and a global i^(#y) phase.
 */
class PauliString {
 public:
  explicit PauliString(std::vector<std::uint8_t> codes);
  /// Letters I/X/Y/Z (either case) or digits 0-3, e.g. "YY" or "0213".
  static PauliString parse(std::string_view text);

  std::size_t size() const { return codes_.size(); }
  std::uint8_t code(std::size_t qubit) const { return codes_[qubit]; }
  std::span<const std::uint8_t> codes() const { return codes_; }

  std::uint32_t x_mask() const { return x_mask_; }
  std::uint32_t z_mask() const { return z_mask_; }
  int y_count() const { return y_count_; }
  /// Two bits per qubit, qubit 0 most significant.
  std::uint32_t packed() const { return packed_; }
  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.codes_ == b.codes_;
  }

 private:
  std::vector<std::uint8_t> codes_;
  std::uint32_t x_mask_ = 0;
  std::uint32_t z_mask_ = 0;
  int y_count_ = 0;
  std::uint32_t packed_ = 0;
};

/// P |s>. Throws StateError on length mismatch.
PureState apply(const PauliString& p, const PureState& s);

/**
 * Memo table of antilinear expectation values for one state, keyed by the
 * packed Pauli code. Not thread-safe; give each worker its own cache.
 */
class ExpectationCache {
 public:
  explicit ExpectationCache(const PureState& s);

  void rebind(const PureState& s);
  bool bound_to(const PureState& s) const;

  const cplx* find(std::uint32_t packed) const;
  void insert(std::uint32_t packed, cplx value);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t size() const { return stored_; }

 private:
  friend cplx antilinear_expect(const PureState&, const PauliString&, ExpectationCache&,
                                kernels::Isa);
  int num_qubits_;
  std::uint64_t fingerprint_;
  std::vector<cplx> values_;
  std::vector<std::uint8_t> present_;
  std::size_t stored_ = 0;
  mutable std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// <psi| P |psi*> without memoization.
cplx antilinear_expect(const PureState& s, const PauliString& p,
                       kernels::Isa isa = kernels::best_isa());

/**
 * <psi| P |psi*>, memoized. Throws StateError if `cache` is bound to a
 * different state.
 */
cplx antilinear_expect(const PureState& s, const PauliString& p, ExpectationCache& cache,
                       kernels::Isa isa = kernels::best_isa());

/**
 * Antilinear expectation for a packed code word whose masks are already
 * known; the hot path of filter evaluation.
 */
cplx antilinear_expect_masks(const PureState& s, std::uint32_t x_mask, std::uint32_t z_mask,
                             int y_count, const kernels::KernelTable& k);

/**
 * |sum_mu g^mumu <sigma_mu>_C^2| with g = diag(-1, 1, 0, 1) for a single-qubit
 * state. Identically zero; returned for numerical verification.
 */
double verify_comb2(const PureState& s);

}  // namespace tangle
