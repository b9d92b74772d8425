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

#include "tangle/filter_ir.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tangle {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw FilterError(FilterError::Kind::BadPrefactor, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::vector<std::string> FilterDef::labels() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& b : blocks)
    for (const auto& s : b.slots)
      if (s.is_label() && seen.insert(s.label).second) out.push_back(s.label);
  return out;
}

const char* to_string(FilterError::Kind kind) {
  switch (kind) {
    case FilterError::Kind::UnpairedLabel:
      return "UnpairedLabel";
    case FilterError::Kind::DuplicateLabelInBlock:
      return "DuplicateLabelInBlock";
    case FilterError::Kind::SlotCountMismatch:
      return "SlotCountMismatch";
    case FilterError::Kind::EmptyFilter:
      return "EmptyFilter";
    case FilterError::Kind::BadPrefactor:
      return "BadPrefactor";
    case FilterError::Kind::InvalidPermutation:
      return "InvalidPermutation";
    case FilterError::Kind::UnknownFilter:
      return "UnknownFilter";
  }
  return "FilterError";
}

FilterDef validate(FilterDef f) {
  using K = FilterError::Kind;
  if (f.num_qubits < 1) throw FilterError(K::EmptyFilter, "filter '" + f.name + "' has no qubits");
  if (f.blocks.empty()) throw FilterError(K::EmptyFilter, "filter '" + f.name + "' has no blocks");
  if (f.prefactor.den() <= 0) throw FilterError(K::BadPrefactor, "invalid prefactor");

  struct Occurrence {
    int lower = 0, upper = 0;
    std::size_t block = 0, slot = 0;
  };
  std::map<std::string, Occurrence> seen;
  for (std::size_t bi = 0; bi < f.blocks.size(); ++bi) {
    const auto& slots = f.blocks[bi].slots;
    if (slots.size() != static_cast<std::size_t>(f.num_qubits)) {
      throw FilterError(K::SlotCountMismatch,
                        "block " + std::to_string(bi) + " has " + std::to_string(slots.size()) +
                            " slots, filter has " + std::to_string(f.num_qubits) + " qubits",
                        bi);
    }
    std::set<std::string> in_block;
    for (std::size_t si = 0; si < slots.size(); ++si) {
      const Slot& s = slots[si];
      if (s.kind == Slot::Kind::Fixed) {
        if (s.code > 3) {
          throw FilterError(K::SlotCountMismatch, "Pauli code out of range", bi, si);
        }
        continue;
      }
      if (s.label.empty()) throw FilterError(K::UnpairedLabel, "empty label", bi, si);
      if (!in_block.insert(s.label).second) {
        throw FilterError(K::DuplicateLabelInBlock,
                          "label '" + s.label + "' occurs twice in block " + std::to_string(bi),
                          bi, si);
      }
      auto& occ = seen[s.label];
      (s.kind == Slot::Kind::Lower ? occ.lower : occ.upper) += 1;
      occ.block = bi;
      occ.slot = si;
    }
  }
  for (const auto& [label, occ] : seen) {
    if (occ.lower != 1 || occ.upper != 1) {
      throw FilterError(K::UnpairedLabel,
                        "label '" + label + "' occurs " + std::to_string(occ.lower) +
                            "x lowered and " + std::to_string(occ.upper) +
                            "x raised; expected once each",
                        occ.block, occ.slot);
    }
  }
  return f;
}

FilterCatalog::FilterCatalog(std::vector<FilterDef> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) e = validate(std::move(e));
}

std::vector<std::string> FilterCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

bool FilterCatalog::contains(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const FilterDef& f) { return f.name == name; });
}

const FilterDef& FilterCatalog::get(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw FilterError(FilterError::Kind::UnknownFilter, "unknown filter '" + name + "'");
}

namespace {

// "m,n,y,y" / "^m,y,l,y": y is the fixed sigma_y, ^ raises a label.
Block block(const char* spec) {
  Block b;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "y") {
      b.slots.push_back(Slot::fixed(2));
    } else if (tok.front() == '^') {
      b.slots.push_back(Slot::upper(tok.substr(1)));
    } else {
      b.slots.push_back(Slot::lower(tok));
    }
  }
  return b;
}

FilterDef filter(std::string name, int q, Rational prefactor,
                 std::initializer_list<const char*> blocks) {
  FilterDef f;
  f.name = std::move(name);
  f.num_qubits = q;
  f.prefactor = prefactor;
  for (const char* spec : blocks) f.blocks.push_back(block(spec));
  return f;
}

std::vector<FilterDef> builtin_filters() {
  return {
      filter("comb1", 1, 1, {"y"}),
      filter("comb2", 1, 1, {"mu", "^mu"}),
      filter("F2_1", 2, 1, {"y,y"}),
      filter("F2_2", 2, {1, 3}, {"mu,nu", "^mu,^nu"}),
      filter("F3_1", 3, 1, {"mu,y,y", "^mu,y,y"}),
      filter("F3_2", 3, {1, 3}, {"mu,nu,lambda", "^mu,^nu,^lambda"}),
      filter("F4_1", 4, 1, {"mu,nu,y,y", "^mu,y,lambda,y", "y,^nu,^lambda,y"}),
      filter("F4_2", 4, 1,
             {"mu,nu,y,y", "^mu,y,lambda,y", "y,^nu,y,tau", "y,y,^lambda,^tau"}),
      // The printed form reuses rho/tau for two separate pairs; each pair of
      // consecutive blocks gets its own labels.
      filter("F4_3", 4, {1, 2},
             {"mu,nu,y,y", "^mu,^nu,y,y", "rho1,y,tau1,y", "^rho1,y,^tau1,y", "y,rho2,tau2,y",
              "y,^rho2,^tau2,y"}),
      filter("F5_1", 5, 1,
             {"mu1,mu2,mu3,y,y", "^mu1,^mu2,y,mu4,y", "mu5,y,^mu3,^mu4,y", "^mu5,y,y,y,y"}),
      filter("F5_2", 5, 1,
             {"mu1,mu2,mu3,y,y", "^mu1,y,y,mu4,mu5", "y,^mu2,y,y,y", "y,y,^mu3,y,y",
              "y,y,y,^mu4,y", "y,y,y,y,^mu5"}),
      filter("F5_3", 5, 1,
             {"mu1,mu2,mu3,y,y", "^mu1,^mu2,mu4,y,y", "mu5,y,^mu3,mu6,y", "^mu5,y,^mu4,mu7,y",
              "mu8,y,y,^mu6,mu9", "^mu8,y,y,^mu7,^mu9"}),
      filter("F5_4", 5, {1, 8},
             {"mu1,mu2,mu3,y,y", "^mu1,^mu2,^mu3,y,y", "mu4,y,mu5,mu6,y", "^mu4,y,^mu5,^mu6,y",
              "mu7,y,y,mu8,mu9", "^mu7,y,y,^mu8,^mu9"}),
      filter("F6_1", 6, 1,
             {"mu1,mu2,y,y,y,y", "^mu1,y,mu3,y,y,y", "mu6,y,y,mu4,y,y", "y,y,^mu3,y,mu5,y",
              "^mu6,^mu2,y,^mu4,^mu5,y"}),
      filter("F6_2", 6, 1,
             {"mu1,mu2,y,y,y,y", "^mu1,y,mu3,y,y,y", "mu6,^mu2,^mu3,mu4,y,y",
              "y,y,y,^mu4,mu5,y", "^mu6,y,y,y,^mu5,y"}),
  };
}

}  // namespace

const FilterCatalog& catalog() {
  static const FilterCatalog instance(builtin_filters());
  return instance;
}

FilterDef permute_qubits(const FilterDef& f, std::span<const int> perm) {
  using K = FilterError::Kind;
  if (perm.size() != static_cast<std::size_t>(f.num_qubits)) {
    throw FilterError(K::InvalidPermutation, "permutation length does not match qubit count");
  }
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= f.num_qubits || seen[p]) {
      throw FilterError(K::InvalidPermutation, "permutation is not a bijection");
    }
    seen[p] = true;
  }
  FilterDef out = f;
  for (std::size_t bi = 0; bi < f.blocks.size(); ++bi) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      out.blocks[bi].slots[perm[j]] = f.blocks[bi].slots[j];
    }
  }
  return validate(std::move(out));
}

FilterDef canonical_labels(const FilterDef& f) {
  std::map<std::string, std::string> rename;
  for (const auto& l : f.labels()) rename.emplace(l, "l" + std::to_string(rename.size()));
  FilterDef out = f;
  for (auto& b : out.blocks)
    for (auto& s : b.slots)
      if (s.is_label()) s.label = rename.at(s.label);
  return out;
}

bool structurally_equal(const FilterDef& a, const FilterDef& b) {
  FilterDef ca = canonical_labels(a);
  FilterDef cb = canonical_labels(b);
  ca.name.clear();
  cb.name.clear();
  return ca == cb;
}

}  // namespace tangle
