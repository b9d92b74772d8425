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

#include "tangle/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cctype>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

namespace tangle {

namespace {

std::uint64_t hash_amplitudes(int num_qubits, std::span<const cplx> amps) {
  // FNV-1a over the raw bits.
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(num_qubits);
  for (const cplx& a : amps) {
    double parts[2] = {a.real(), a.imag()};
    unsigned char bytes[sizeof(parts)];
    std::memcpy(bytes, parts, sizeof(parts));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ull;
    }
  }
  return h;
}

double sum_norm(std::span<const cplx> amps) {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return s;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

int parse_header(std::istringstream& in, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line)) continue;
    std::istringstream ls(line);
    std::string key;
    int q = 0;
    if (!(ls >> key >> q) || key != "qubits:") {
      throw StateError("line " + std::to_string(line_no) + ": expected 'qubits: <q>'");
    }
    if (q < 1 || q > kMaxQubits) {
      throw StateError("line " + std::to_string(line_no) + ": qubit count out of range");
    }
    return q;
  }
  throw StateError("missing 'qubits:' header");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw StateError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

PureState::PureState(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
    throw StateError("qubit count " + std::to_string(num_qubits_) + " out of range [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
  if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
    throw StateError("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                     ", expected 2^" + std::to_string(num_qubits_));
  }
  norm_sq_ = sum_norm(amplitudes_);
  raw_norm_sq_ = norm_sq_;
  fingerprint_ = hash_amplitudes(num_qubits_, amplitudes_);
}

PureState PureState::scaled(cplx factor) const {
  std::vector<cplx> out(amplitudes_);
  for (auto& a : out) a *= factor;
  return PureState(num_qubits_, std::move(out));
}

PureState PureState::normalized() const {
  if (norm_sq_ == 0.0) throw StateError("cannot normalize the zero vector");
  PureState out = scaled(1.0 / std::sqrt(norm_sq_));
  out.raw_norm_sq_ = norm_sq_;
  return out;
}

PureState PureState::with_raw_norm_sq(double raw) const {
  PureState out = *this;
  out.raw_norm_sq_ = raw;
  return out;
}

PureState PureState::permuted(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(num_qubits_)) {
    throw StateError("permutation length does not match qubit count");
  }
  std::vector<bool> seen(num_qubits_, false);
  for (int p : perm) {
    if (p < 0 || p >= num_qubits_ || seen[p]) throw StateError("invalid qubit permutation");
    seen[p] = true;
  }
  std::vector<cplx> out(amplitudes_.size());
  for (std::size_t b = 0; b < amplitudes_.size(); ++b) {
    std::size_t target = 0;
    for (int j = 0; j < num_qubits_; ++j) {
      if (b & qubit_bit(num_qubits_, j)) target |= qubit_bit(num_qubits_, perm[j]);
    }
    out[target] = amplitudes_[b];
  }
  return PureState(num_qubits_, std::move(out)).with_raw_norm_sq(raw_norm_sq_);
}

std::string basis_label(int num_qubits, std::size_t index) {
  std::string s(num_qubits, '0');
  for (int j = 0; j < num_qubits; ++j) {
    if (index & qubit_bit(num_qubits, j)) s[j] = '1';
  }
  return s;
}

std::size_t parse_basis_label(std::string_view bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw StateError("invalid basis label '" + std::string(bits) + "'");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return index;
}

PureState make_state(int num_qubits, std::span<const BasisEntry> entries) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw StateError("qubit count out of range");
  }
  std::vector<cplx> amps(std::size_t{1} << num_qubits);
  std::set<std::size_t> seen;
  for (const auto& e : entries) {
    if (e.bits.size() != static_cast<std::size_t>(num_qubits)) {
      throw StateError("bitstring '" + e.bits + "' has wrong length for " +
                       std::to_string(num_qubits) + " qubits");
    }
    const std::size_t idx = parse_basis_label(e.bits);
    if (!seen.insert(idx).second) throw StateError("duplicate bitstring '" + e.bits + "'");
    amps[idx] = e.coeff;
  }
  PureState raw(num_qubits, std::move(amps));
  if (raw.norm_sq() == 0.0) throw StateError("state vector is zero");
  return raw.normalized();
}

PureState make_state(int num_qubits, std::initializer_list<BasisEntry> entries) {
  return make_state(num_qubits, std::span<const BasisEntry>(entries.begin(), entries.size()));
}

PureState conjugate(const PureState& s) {
  std::vector<cplx> out(s.amplitudes().begin(), s.amplitudes().end());
  for (auto& a : out) a = std::conj(a);
  return PureState(s.num_qubits(), std::move(out)).with_raw_norm_sq(s.raw_norm_sq());
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<cplx> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return PureState(a.num_qubits() + b.num_qubits(), std::move(out));
}

DensityMatrix::DensityMatrix(int num_qubits, ComplexMatrix entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  if (num_qubits_ < 1 || num_qubits_ > kMaxQubits ||
      entries_.dim() != (std::size_t{1} << num_qubits_)) {
    throw StateError("density matrix dimension does not match qubit count");
  }
  if (entries_.max_abs_diff(entries_.adjoint()) >= 1e-12) {
    throw StateError("density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - 1.0) >= 1e-12) {
    throw StateError("density matrix trace is not 1");
  }
  const auto spectrum = hermitian_spectrum(entries_);
  if (spectrum.back() < -1e-10) {
    throw StateError("density matrix has negative eigenvalue");
  }
}

double DensityMatrix::purity() const {
  return (entries_ * entries_).trace().real();
}

QubitSubset::QubitSubset(std::vector<int> qubits, int num_qubits)
    : qubits_(std::move(qubits)), num_qubits_(num_qubits) {
  if (qubits_.empty()) throw StateError("qubit subset is empty");
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i] < 0 || qubits_[i] >= num_qubits_) {
      throw StateError("qubit " + std::to_string(qubits_[i]) + " out of range");
    }
    if (i > 0 && qubits_[i] <= qubits_[i - 1]) {
      throw StateError("qubit subset must be strictly increasing");
    }
  }
}

QubitSubset QubitSubset::complement() const {
  std::vector<int> rest;
  for (int j = 0; j < num_qubits_; ++j) {
    if (!std::binary_search(qubits_.begin(), qubits_.end(), j)) rest.push_back(j);
  }
  return QubitSubset(std::move(rest), num_qubits_);
}

std::string QubitSubset::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(qubits_[i]);
  }
  return s + "}";
}

std::vector<QubitSubset> proper_subsets(int num_qubits) {
  std::vector<std::vector<int>> all;
  const std::uint32_t full = (1u << num_qubits) - 1;
  for (std::uint32_t m = 1; m < full; ++m) {
    std::vector<int> qs;
    for (int j = 0; j < num_qubits; ++j)
      if (m & (1u << j)) qs.push_back(j);
    all.push_back(std::move(qs));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<QubitSubset> out;
  out.reserve(all.size());
  for (auto& qs : all) out.emplace_back(std::move(qs), num_qubits);
  return out;
}

DensityMatrix to_density(const PureState& s) {
  if (std::abs(s.norm_sq() - 1.0) > 1e-10) {
    throw StateError("to_density requires a unit-norm state");
  }
  ComplexMatrix m(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.dim(); ++c) m(r, c) = s[r] * std::conj(s[c]);
  // Snap the trace onto 1 so the density invariant holds exactly.
  const double tr = m.trace().real();
  return DensityMatrix(s.num_qubits(), m * cplx{1.0 / tr});
}

namespace {

// Index of the sub-register value `sub` scattered into the positions of `qubits`.
std::size_t scatter(std::size_t sub, const std::vector<int>& qubits, int num_qubits) {
  std::size_t idx = 0;
  const int k = static_cast<int>(qubits.size());
  for (int i = 0; i < k; ++i) {
    if (sub & (std::size_t{1} << (k - 1 - i))) idx |= qubit_bit(num_qubits, qubits[i]);
  }
  return idx;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
  const int q = rho.num_qubits();
  if (keep.num_qubits() != q) throw StateError("subset register size mismatch");
  if (!keep.is_proper()) throw StateError("partial trace needs a proper subset");
  const QubitSubset traced = keep.complement();
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  ComplexMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t rk = scatter(r, keep.qubits(), q);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t ck = scatter(c, keep.qubits(), q);
      cplx sum = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t tt = scatter(t, traced.qubits(), q);
        sum += rho(rk | tt, ck | tt);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

DensityMatrix reduced_density(const PureState& s, const QubitSubset& keep) {
  const int q = s.num_qubits();
  if (keep.num_qubits() != q) throw StateError("subset register size mismatch");
  if (!keep.is_proper()) throw StateError("partial trace needs a proper subset");
  if (std::abs(s.norm_sq() - 1.0) > 1e-10) {
    throw StateError("reduced_density requires a unit-norm state");
  }
  const QubitSubset traced = keep.complement();
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  ComplexMatrix out(dk);
  for (std::size_t t = 0; t < dt; ++t) {
    const std::size_t tt = scatter(t, traced.qubits(), q);
    for (std::size_t r = 0; r < dk; ++r) {
      const cplx ar = s[scatter(r, keep.qubits(), q) | tt];
      if (ar == cplx{}) continue;
      for (std::size_t c = 0; c < dk; ++c) {
        out(r, c) += ar * std::conj(s[scatter(c, keep.qubits(), q) | tt]);
      }
    }
  }
  const double tr = out.trace().real();
  return DensityMatrix(static_cast<int>(keep.size()), out * cplx{1.0 / tr});
}

std::vector<double> hermitian_spectrum(const ComplexMatrix& m) {
  return hermitian_eigen(m).values;
}

std::vector<double> hermitian_spectrum(const DensityMatrix& rho) {
  return hermitian_spectrum(rho.matrix());
}

int numerical_rank(const DensityMatrix& rho, double tol) {
  const auto values = hermitian_spectrum(rho);
  return static_cast<int>(std::count_if(values.begin(), values.end(),
                                        [tol](double v) { return v > tol; }));
}

PureState parse_state_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int line_no = 0;
  const int q = parse_header(in, line_no);
  std::vector<BasisEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line)) continue;
    std::istringstream ls(line);
    BasisEntry e;
    double re = 0.0, im = 0.0;
    std::string extra;
    if (!(ls >> e.bits >> re >> im) || (ls >> extra)) {
      throw StateError("line " + std::to_string(line_no) +
                       ": expected '<bitstring> <re> <im>'");
    }
    e.coeff = {re, im};
    entries.push_back(std::move(e));
  }
  return make_state(q, entries);
}

PureState load_state_file(const std::string& path) {
  return parse_state_text(read_file(path));
}

DensityMatrix parse_density_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int line_no = 0;
  const int q = parse_header(in, line_no);
  const std::size_t dim = std::size_t{1} << q;
  ComplexMatrix m(dim);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line)) continue;
    std::istringstream ls(line);
    long r = -1, c = -1;
    double re = 0.0, im = 0.0;
    std::string extra;
    if (!(ls >> r >> c >> re >> im) || (ls >> extra)) {
      throw StateError("line " + std::to_string(line_no) + ": expected '<row> <col> <re> <im>'");
    }
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= dim ||
        static_cast<std::size_t>(c) >= dim) {
      throw StateError("line " + std::to_string(line_no) + ": index out of range");
    }
    m(r, c) = {re, im};
  }
  return DensityMatrix(q, std::move(m));
}

DensityMatrix load_density_file(const std::string& path) {
  return parse_density_text(read_file(path));
}

}  // namespace tangle
