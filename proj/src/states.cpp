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

#include "tangle/states.hpp"

#include <algorithm>
#include <cmath>

namespace tangle {

Rational CatalogEntry::raw_norm_sq() const {
  std::int64_t sum = 0;
  for (const auto& c : components) sum += c.second;
  return Rational(sum, prefactor_inv_sq);
}

PureState CatalogEntry::printed() const {
  std::vector<cplx> amps(std::size_t{1} << num_qubits);
  const double scale = 1.0 / std::sqrt(static_cast<double>(prefactor_inv_sq));
  for (const auto& [bits, weight] : components) {
    amps[parse_basis_label(bits)] = std::sqrt(static_cast<double>(weight)) * scale;
  }
  return PureState(num_qubits, std::move(amps));
}

PureState CatalogEntry::state() const {
  std::vector<BasisEntry> entries;
  for (const auto& [bits, weight] : components) {
    entries.push_back({bits, std::sqrt(static_cast<double>(weight))});
  }
  return make_state(num_qubits, entries).with_raw_norm_sq(raw_norm_sq().value());
}

namespace {

std::string weight_one(int q, int k) {
  std::string s(q, '0');
  s[k] = '1';
  return s;
}

CatalogEntry ghz(int q) {
  return {"ghz" + std::to_string(q),
          q,
          2,
          {{std::string(q, '0'), 1}, {std::string(q, '1'), 1}},
          2,
          "GHZ"};
}

CatalogEntry w_state(int q) {
  CatalogEntry e{"w" + std::to_string(q), q, q, {}, q, "W state, single excitation"};
  for (int k = 0; k < q; ++k) e.components.push_back({weight_one(q, k), 1});
  return e;
}

}  // namespace

StateCatalog::StateCatalog() {
  entries_.push_back({"bell", 2, 2, {{"00", 1}, {"11", 1}}, 2, "Bell pair"});
  for (int q = 2; q <= 6; ++q) entries_.push_back(ghz(q));
  entries_.push_back(w_state(3));
  entries_.push_back({"w4",
                      4,
                      4,
                      {{"0111", 1}, {"1011", 1}, {"1101", 1}, {"1110", 1}},
                      4,
                      "four-qubit W state as displayed for the four-qubit filters"});
  entries_.push_back(w_state(5));
  entries_.push_back(w_state(6));

  entries_.push_back({"phi1", 4, 2, {{"0000", 1}, {"1111", 1}}, 2, "four-qubit GHZ"});
  entries_.push_back(
      {"phi4", 4, 4, {{"1111", 1}, {"1100", 1}, {"0010", 1}, {"0001", 1}}, 4, ""});
  entries_.push_back({"phi5",
                      4,
                      5,
                      {{"1111", 2}, {"1000", 1}, {"0100", 1}, {"0010", 1}, {"0001", 1}},
                      6,
                      ""});

  entries_.push_back({"psi2", 5, 2, {{"11111", 1}, {"00000", 1}}, 2, "five-qubit GHZ"});
  entries_.push_back(
      {"psi4", 5, 4, {{"11111", 1}, {"11100", 1}, {"00010", 1}, {"00001", 1}}, 4, ""});
  entries_.push_back({"psi5",
                      5,
                      5,
                      {{"11111", 2}, {"11000", 1}, {"00100", 1}, {"00010", 1}, {"00001", 1}},
                      6,
                      ""});
  entries_.push_back({"psi6",
                      5,
                      6,
                      {{"11111", 3},
                       {"10000", 1},
                       {"01000", 1},
                       {"00100", 1},
                       {"00010", 1},
                       {"00001", 1}},
                      8,
                      ""});

  entries_.push_back({"xi2", 6, 2, {{"111111", 1}, {"000000", 1}}, 2, "six-qubit GHZ"});
  entries_.push_back(
      {"xi4", 6, 4, {{"111111", 1}, {"111100", 1}, {"000010", 1}, {"000001", 1}}, 4, ""});
  entries_.push_back({"xi5",
                      6,
                      5,
                      {{"111111", 2}, {"111000", 1}, {"000100", 1}, {"000010", 1}, {"000001", 1}},
                      6,
                      ""});
  entries_.push_back({"xi6",
                      6,
                      6,
                      {{"111111", 3},
                       {"110000", 1},
                       {"001000", 1},
                       {"000100", 1},
                       {"000010", 1},
                       {"000001", 1}},
                      8,
                      "sqrt3|1..1> + |110000> + |00>|W4>"});

  CatalogEntry xi7{"xi7", 6, 7, {{"111111", 3}}, 8, "sqrt3|111111> + |W6>, unit-normalized"};
  for (int k = 0; k < 6; ++k) xi7.components.push_back({weight_one(6, k), 1});
  entries_.push_back(xi7);
  CatalogEntry printed = xi7;
  printed.name = "xi7_printed";
  printed.note = "sqrt3|111111> + |W6> with printed prefactor 1/(2 sqrt2); norm^2 = 9/8";
  entries_.push_back(printed);
  CatalogEntry coef2 = xi7;
  coef2.name = "xi7_coef2";
  coef2.components[0].second = 4;
  coef2.prefactor_inv_sq = 10;
  coef2.note = "2|111111> + |W6>, unit-normalized";
  entries_.push_back(coef2);
}

const StateCatalog& StateCatalog::instance() {
  static const StateCatalog catalog;
  return catalog;
}

std::vector<std::string> StateCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

bool StateCatalog::contains(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const CatalogEntry& e) { return e.name == name; });
}

const CatalogEntry& StateCatalog::entry(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw StateError("unknown state '" + name + "'");
}

PureState get_state(const std::string& name) {
  const auto& e = StateCatalog::instance().entry(name);
  if (name == "xi7_printed") return e.printed();
  return e.state();
}

PureState random_pure(int num_qubits, Rng& rng) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) throw StateError("qubit count out of range");
  std::vector<cplx> amps(std::size_t{1} << num_qubits);
  for (auto& a : amps) a = rng.complex_normal();
  return PureState(num_qubits, std::move(amps)).normalized();
}

PureState random_product(std::span<const int> block_sizes, Rng& rng) {
  if (block_sizes.empty()) throw StateError("empty partition");
  int total = 0;
  for (int b : block_sizes) {
    if (b < 1) throw StateError("partition block sizes must be positive");
    total += b;
  }
  if (total > kMaxQubits) throw StateError("partition exceeds the qubit limit");
  PureState out = random_pure(block_sizes[0], rng);
  for (std::size_t i = 1; i < block_sizes.size(); ++i) {
    out = tensor(out, random_pure(block_sizes[i], rng));
  }
  return out.normalized();
}

PureState random_product_groups(const std::vector<std::vector<int>>& groups, int num_qubits,
                                Rng& rng) {
  std::vector<int> owner(num_qubits, -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) throw StateError("empty group in partition");
    for (int j : groups[g]) {
      if (j < 0 || j >= num_qubits || owner[j] != -1) {
        throw StateError("groups do not partition the register");
      }
      owner[j] = static_cast<int>(g);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw StateError("groups do not cover the register");
  }
  // Build the product with groups laid out contiguously, then move each
  // group's qubits into place.
  std::vector<int> sizes;
  std::vector<int> layout;  // layout[position] = original qubit
  for (const auto& g : groups) {
    sizes.push_back(static_cast<int>(g.size()));
    layout.insert(layout.end(), g.begin(), g.end());
  }
  const PureState contiguous = random_product(sizes, rng);
  std::vector<int> perm(num_qubits);
  for (int pos = 0; pos < num_qubits; ++pos) perm[pos] = layout[pos];
  return contiguous.permuted(perm);
}

std::vector<std::vector<std::vector<int>>> set_partitions(int num_qubits) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(num_qubits, 0);
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  while (true) {
    const int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> part(blocks);
    for (int j = 0; j < num_qubits; ++j) part[rgs[j]].push_back(j);
    out.push_back(std::move(part));
    int i = num_qubits - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace tangle
