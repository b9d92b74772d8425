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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangle/error.hpp"

namespace tangle {

/// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // always "p/q"

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Contraction metric g = diag(-1, 1, 0, 1) over Pauli indices 0..3.
inline constexpr std::array<int, 4> kMetric = {-1, 1, 0, 1};
/// Index values that survive contraction (g^22 = 0 removes sigma_y).
inline constexpr std::array<std::uint8_t, 3> kContractedValues = {0, 1, 3};

/// One tensor factor of a block: a fixed Pauli or a lowered/raised label.
struct Slot {
  enum class Kind { Fixed, Lower, Upper };

  Kind kind = Kind::Fixed;
  std::uint8_t code = 0;  // Fixed only
  std::string label;      // Lower / Upper only

  static Slot fixed(std::uint8_t code) { return {Kind::Fixed, code, {}}; }
  static Slot lower(std::string label) { return {Kind::Lower, 0, std::move(label)}; }
  static Slot upper(std::string label) { return {Kind::Upper, 0, std::move(label)}; }
  bool is_label() const { return kind != Kind::Fixed; }

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Block {
  std::vector<Slot> slots;
  friend bool operator==(const Block&, const Block&) = default;
};

/**
 * A filter: prefactor times the metric-contracted product of per-block
 * antilinear expectations. Each block acts on its own copy of the state.
 */
struct FilterDef {
  std::string name;
  int num_qubits = 0;
  std::vector<Block> blocks;
  Rational prefactor{1};

  std::size_t order() const { return blocks.size(); }
  /// Homogeneous degree of the value in the amplitudes.
  std::size_t degree() const { return 2 * blocks.size(); }
  /// Distinct labels in first-appearance order (block-major, slot-minor).
  std::vector<std::string> labels() const;

  friend bool operator==(const FilterDef&, const FilterDef&) = default;
};

class FilterError : public Error {
 public:
  enum class Kind {
    UnpairedLabel,
    DuplicateLabelInBlock,
    SlotCountMismatch,
    EmptyFilter,
    BadPrefactor,
    InvalidPermutation,
    UnknownFilter,
  };

  FilterError(Kind kind, std::string message, std::optional<std::size_t> block = {},
              std::optional<std::size_t> slot = {})
      : Error(std::move(message)), kind_(kind), block_(block), slot_(slot) {}

  Kind kind() const { return kind_; }
  /// Offending block and slot, when the error is tied to one.
  std::optional<std::size_t> block() const { return block_; }
  std::optional<std::size_t> slot() const { return slot_; }

 private:
  Kind kind_;
  std::optional<std::size_t> block_;
  std::optional<std::size_t> slot_;
};

const char* to_string(FilterError::Kind kind);

/**
 * Checks slot counts, label pairing (one Lower and one Upper occurrence per
 * label, never both in the same block), q >= 1 and n >= 1. Returns the
 * definition unchanged or throws FilterError.
 */
FilterDef validate(FilterDef f);

/// Immutable named collection of the built-in filters.
class FilterCatalog {
 public:
  explicit FilterCatalog(std::vector<FilterDef> entries);

  const std::vector<FilterDef>& entries() const { return entries_; }
  std::vector<std::string> names() const;
  bool contains(const std::string& name) const;
  /// Throws FilterError(UnknownFilter).
  const FilterDef& get(const std::string& name) const;

 private:
  std::vector<FilterDef> entries_;
};

/// comb1, comb2, F2_1 ... F6_2.
const FilterCatalog& catalog();

/// Qubit j of every block moves to position perm[j].
FilterDef permute_qubits(const FilterDef& f, std::span<const int> perm);

/// Labels renamed to l0, l1, ... in first-appearance order.
FilterDef canonical_labels(const FilterDef& f);

/// Equal up to a consistent renaming of labels (name ignored).
bool structurally_equal(const FilterDef& a, const FilterDef& b);

}  // namespace tangle
