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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/matrix.hpp"

namespace tangle {

/// Largest register the library accepts.
inline constexpr int kMaxQubits = 8;

/**
 * Pure state of `num_qubits` qubits as a dense amplitude vector.
 *
 * Basis order: index bit (q-1-j) is qubit j, so qubit 0 is the leftmost
 * character of a ket label |q0 q1 ... >. States need not be normalized; the
 * squared norm is cached at construction. `raw_norm_sq` records the squared
 * norm of the input a normalizing constructor divided out.
 */
class PureState {
 public:
  PureState(int num_qubits, std::vector<cplx> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  const cplx& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_sq() const { return norm_sq_; }
  double raw_norm_sq() const { return raw_norm_sq_; }
  /// Content hash of the amplitude bits; equal states share a fingerprint.
  std::uint64_t fingerprint() const { return fingerprint_; }

  PureState scaled(cplx factor) const;
  PureState normalized() const;
  PureState with_raw_norm_sq(double raw) const;

  /// Amplitudes reordered so that qubit j of this state becomes qubit perm[j].
  PureState permuted(std::span<const int> perm) const;

 private:
  int num_qubits_;
  std::vector<cplx> amplitudes_;
  double norm_sq_;
  double raw_norm_sq_;
  std::uint64_t fingerprint_;
};

/// Bit mask of qubit `qubit` in a register of `num_qubits` qubits.
inline std::uint32_t qubit_bit(int num_qubits, int qubit) {
  return 1u << (num_qubits - 1 - qubit);
}

std::string basis_label(int num_qubits, std::size_t index);
std::size_t parse_basis_label(std::string_view bits);

struct BasisEntry {
  std::string bits;
  cplx coeff;
};

/**
 * Builds a unit-normalized state from (bitstring, coefficient) pairs. The
 * squared norm before division is kept as raw_norm_sq(). Throws StateError on
 * duplicate or wrong-length bitstrings and on an all-zero vector.
 */
PureState make_state(int num_qubits, std::span<const BasisEntry> entries);
PureState make_state(int num_qubits, std::initializer_list<BasisEntry> entries);

/// Amplitude-wise complex conjugation.
PureState conjugate(const PureState& s);

/// Tensor product; `a` supplies the leading qubits.
PureState tensor(const PureState& a, const PureState& b);

/// Hermitian unit-trace positive matrix over `num_qubits` qubits.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), unit trace (1e-12) and eigenvalues >= -1e-10.
  DensityMatrix(int num_qubits, ComplexMatrix entries);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return entries_.dim(); }
  const ComplexMatrix& matrix() const { return entries_; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  double purity() const;

 private:
  int num_qubits_;
  ComplexMatrix entries_;
};

/// Strictly increasing, non-empty list of qubit positions.
class QubitSubset {
 public:
  QubitSubset(std::vector<int> qubits, int num_qubits);
  QubitSubset(std::initializer_list<int> qubits, int num_qubits)
      : QubitSubset(std::vector<int>(qubits), num_qubits) {}

  const std::vector<int>& qubits() const { return qubits_; }
  std::size_t size() const { return qubits_.size(); }
  int num_qubits() const { return num_qubits_; }
  bool is_proper() const { return static_cast<int>(qubits_.size()) < num_qubits_; }
  QubitSubset complement() const;
  std::string to_string() const;

  friend bool operator==(const QubitSubset&, const QubitSubset&) = default;

 private:
  std::vector<int> qubits_;
  int num_qubits_;
};

/// All non-empty proper subsets of [0, q), ordered by size then lexicographically.
std::vector<QubitSubset> proper_subsets(int num_qubits);

/// |psi><psi|; the input must be unit-norm within 1e-10.
DensityMatrix to_density(const PureState& s);

/// Reduced matrix on `keep`; `keep` must be a non-empty proper subset.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep);

/// Reduced matrix of a pure state without forming the full projector.
DensityMatrix reduced_density(const PureState& s, const QubitSubset& keep);

/// Real eigenvalues in descending order (cyclic Jacobi).
std::vector<double> hermitian_spectrum(const DensityMatrix& rho);
std::vector<double> hermitian_spectrum(const ComplexMatrix& m);

/// Number of eigenvalues above `tol`.
int numerical_rank(const DensityMatrix& rho, double tol = 1e-10);

/**
 * Parses the text state format: a `qubits: <q>` header followed by
 * `<bitstring> <re> <im>` lines; `#` starts a comment. The result is
 * renormalized with the raw squared norm retained.
 */
PureState parse_state_text(std::string_view text);
PureState load_state_file(const std::string& path);

/**
 * Parses a density matrix: `qubits: <q>` header followed by
 * `<row> <col> <re> <im>` lines for nonzero entries.
 */
DensityMatrix parse_density_text(std::string_view text);
DensityMatrix load_density_file(const std::string& path);

}  // namespace tangle
