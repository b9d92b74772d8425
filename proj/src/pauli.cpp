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

#include "tangle/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>

namespace tangle {

namespace {

// i^k for k mod 4.
cplx i_power(int k) {
  switch (k & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

PauliString::PauliString(std::vector<std::uint8_t> codes) : codes_(std::move(codes)) {
  const int q = static_cast<int>(codes_.size());
  if (q < 1 || q > kMaxQubits) throw StateError("Pauli string length out of range");
  for (int j = 0; j < q; ++j) {
    const std::uint8_t c = codes_[j];
    if (c > 3) throw StateError("Pauli code " + std::to_string(c) + " out of range");
    const std::uint32_t bit = qubit_bit(q, j);
    if (c == 1 || c == 2) x_mask_ |= bit;
    if (c == 2 || c == 3) z_mask_ |= bit;
    if (c == 2) ++y_count_;
    packed_ = (packed_ << 2) | c;
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<std::uint8_t> codes;
  for (char ch : text) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'I':
      case '0':
        codes.push_back(0);
        break;
      case 'X':
      case '1':
        codes.push_back(1);
        break;
      case 'Y':
      case '2':
        codes.push_back(2);
        break;
      case 'Z':
      case '3':
        codes.push_back(3);
        break;
      default:
        throw StateError("invalid Pauli letter '" + std::string(1, ch) + "'");
    }
  }
  return PauliString(std::move(codes));
}

std::string PauliString::to_string() const {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (auto c : codes_) s += kLetters[c];
  return s;
}

PureState apply(const PauliString& p, const PureState& s) {
  if (p.size() != static_cast<std::size_t>(s.num_qubits())) {
    throw StateError("Pauli string length " + std::to_string(p.size()) +
                     " does not match qubit count " + std::to_string(s.num_qubits()));
  }
  // sigma_y = i sigma_x sigma_z, so (P v)_b = i^ny (-1)^popcount((b^x)&z) v_{b^x}.
  const cplx phase = i_power(p.y_count());
  std::vector<cplx> out(s.dim());
  for (std::size_t b = 0; b < s.dim(); ++b) {
    const std::size_t src = b ^ p.x_mask();
    const bool negative = std::popcount(static_cast<std::uint32_t>(src) & p.z_mask()) & 1;
    out[b] = (negative ? -phase : phase) * s[src];
  }
  return PureState(s.num_qubits(), std::move(out));
}

ExpectationCache::ExpectationCache(const PureState& s) { rebind(s); }

void ExpectationCache::rebind(const PureState& s) {
  num_qubits_ = s.num_qubits();
  fingerprint_ = s.fingerprint();
  const std::size_t entries = std::size_t{1} << (2 * num_qubits_);
  values_.assign(entries, cplx{});
  present_.assign(entries, 0);
  stored_ = 0;
  hits_ = 0;
  misses_ = 0;
}

bool ExpectationCache::bound_to(const PureState& s) const {
  return s.num_qubits() == num_qubits_ && s.fingerprint() == fingerprint_;
}

const cplx* ExpectationCache::find(std::uint32_t packed) const {
  if (!present_[packed]) return nullptr;
  ++hits_;
  return &values_[packed];
}

void ExpectationCache::insert(std::uint32_t packed, cplx value) {
  if (!present_[packed]) {
    present_[packed] = 1;
    ++stored_;
  }
  values_[packed] = value;
}

cplx antilinear_expect_masks(const PureState& s, std::uint32_t x_mask, std::uint32_t z_mask,
                             int y_count, const kernels::KernelTable& k) {
  // <psi|P|psi*> = sum_b conj(a_b) (P conj(a))_b = i^ny conj(sum_b sign_b a_b a_{b^x}).
  const cplx bilinear = k.pauli_bilinear(s.amplitudes().data(), s.dim(), x_mask, z_mask);
  return i_power(y_count) * std::conj(bilinear);
}

cplx antilinear_expect(const PureState& s, const PauliString& p, kernels::Isa isa) {
  if (p.size() != static_cast<std::size_t>(s.num_qubits())) {
    throw StateError("Pauli string length does not match qubit count");
  }
  return antilinear_expect_masks(s, p.x_mask(), p.z_mask(), p.y_count(), kernels::table(isa));
}

cplx antilinear_expect(const PureState& s, const PauliString& p, ExpectationCache& cache,
                       kernels::Isa isa) {
  if (!cache.bound_to(s)) throw StateError("expectation cache is bound to a different state");
  if (p.size() != static_cast<std::size_t>(s.num_qubits())) {
    throw StateError("Pauli string length does not match qubit count");
  }
  if (const cplx* hit = cache.find(p.packed())) return *hit;
  ++cache.misses_;
  const cplx v = antilinear_expect(s, p, isa);
  cache.insert(p.packed(), v);
  return v;
}

double verify_comb2(const PureState& s) {
  if (s.num_qubits() != 1) throw StateError("verify_comb2 expects a single-qubit state");
  static constexpr double kMetric[4] = {-1.0, 1.0, 0.0, 1.0};
  cplx sum = 0.0;
  for (std::uint8_t mu = 0; mu < 4; ++mu) {
    const cplx e = antilinear_expect(s, PauliString({mu}));
    sum += kMetric[mu] * e * e;
  }
  return std::abs(sum);
}

}  // namespace tangle
