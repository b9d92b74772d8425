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

#include "tangle/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tangle/filter_ir.hpp"
#include "tangle/random.hpp"

namespace tangle {

namespace {

const ComplexMatrix& pauli_matrix(int code) {
  static const std::array<ComplexMatrix, 4> kPauli = {
      ComplexMatrix(2, {1.0, 0.0, 0.0, 1.0}),
      ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}),
      ComplexMatrix(2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}),
      ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}),
  };
  return kPauli[code];
}

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) throw StateError("expected a two-qubit density matrix");
}

void require_unit(const PureState& s) {
  if (std::abs(s.norm_sq() - 1.0) > 1e-10) throw StateError("expected a unit-norm state");
}

nlohmann::json subset_json(const QubitSubset& s) { return s.qubits(); }

}  // namespace

nlohmann::json ConcurrenceReport::to_json() const {
  nlohmann::json j = {{"pure_value", pure_value},
                      {"squared_value", squared_value},
                      {"closed_form", closed_form}};
  if (mixed_value) j["mixed_value"] = *mixed_value;
  return j;
}

ConcurrenceReport concurrence_pure(const PureState& s, const EvalOptions& opts) {
  if (s.num_qubits() != 2) throw StateError("concurrence needs a two-qubit state");
  require_unit(s);
  ConcurrenceReport r;
  r.pure_value = measure(catalog().get("F2_1"), s, opts).modulus;
  r.squared_value = measure(catalog().get("F2_2"), s, opts).modulus;
  r.closed_form = 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
  return r;
}

ComplexMatrix r_matrix(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const ComplexMatrix yy = kron(pauli_matrix(2), pauli_matrix(2));
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  return root * yy * rho.matrix().conjugate() * yy * root;
}

std::vector<double> r_spectrum(const DensityMatrix& rho) {
  std::vector<double> values = hermitian_eigen(r_matrix(rho), 1e-10).values;
  // eigenvalues inside the rounding floor are zero; their roots would be ~1e-8
  const double floor =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, values.front());
  for (double& v : values) {
    if (v < -1e-10) throw StateError("R matrix has a negative eigenvalue");
    if (v < floor) v = 0.0;
  }
  return values;
}

double concurrence_mixed(const DensityMatrix& rho) {
  const auto lambda = r_spectrum(rho);
  const double c = std::sqrt(lambda[0]) - std::sqrt(lambda[1]) - std::sqrt(lambda[2]) -
                   std::sqrt(lambda[3]);
  return std::max(0.0, c);
}

ComplexMatrix q_matrix(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix rc = r.conjugate();

  std::vector<ComplexMatrix> pairs;
  std::vector<double> signs;
  for (int mu : kContractedValues) {
    for (int nu : kContractedValues) {
      pairs.push_back(kron(pauli_matrix(mu), pauli_matrix(nu)));
      signs.push_back(static_cast<double>(kMetric[mu] * kMetric[nu]));
    }
  }
  ComplexMatrix inner(4);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    const ComplexMatrix left = pairs[a] * rc;  // (s_mu s_nu) rho*
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const ComplexMatrix term =
          left * pairs[b] * r * pairs[a] * rc * pairs[b];
      inner += term * cplx{signs[a] * signs[b]};
    }
  }
  return root * inner * root;
}

nlohmann::json QRelationReport::to_json() const {
  return {{"scale_re", scale.real()},
          {"scale_im", scale.imag()},
          {"residual", residual},
          {"scale_is_one", scale_is_one},
          {"degenerate", degenerate}};
}

QRelationReport check_q_equals_r2(const DensityMatrix& rho, double tol) {
  const ComplexMatrix r = r_matrix(rho);
  const ComplexMatrix r2 = r * r;
  const ComplexMatrix q = q_matrix(rho);
  QRelationReport out;
  const double r2_norm = r2.frobenius_norm();
  if (r2_norm < 1e-14) {
    out.degenerate = true;
    out.residual = q.frobenius_norm();
    return out;
  }
  out.scale = frobenius_inner(r2, q) / frobenius_inner(r2, r2);
  out.residual = (q - r2 * out.scale).frobenius_norm() / r2_norm;
  out.scale_is_one = std::abs(out.scale - 1.0) < tol;
  return out;
}

DensityMatrix werner_state(double p) {
  ComplexMatrix m(4);
  const double mix = (1.0 - p) / 4.0;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = mix;
  // |Psi-> = (|01> - |10>)/sqrt2
  m(1, 1) += p / 2.0;
  m(2, 2) += p / 2.0;
  m(1, 2) -= p / 2.0;
  m(2, 1) -= p / 2.0;
  return DensityMatrix(2, std::move(m));
}

bool Tangle3Report::agree(double tol) const {
  return std::abs(via_f3_1 - via_cayley) < tol && std::abs(via_f3_2 - via_cayley) < tol &&
         std::abs(via_f3_1 - via_f3_2) < tol;
}

nlohmann::json Tangle3Report::to_json() const {
  return {{"via_F3_1", via_f3_1}, {"via_F3_2", via_f3_2}, {"via_cayley", via_cayley}};
}

double cayley_tangle(const PureState& s) {
  if (s.num_qubits() != 3) throw StateError("3-tangle needs a three-qubit state");
  auto a = [&](int i, int j, int k) { return s[static_cast<std::size_t>(i * 4 + j * 2 + k)]; };
  const cplx d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                  a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                  a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                  a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const cplx d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                  a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                  a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                  a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const cplx d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                  a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

Tangle3Report tangle3(const PureState& s, const EvalOptions& opts) {
  if (s.num_qubits() != 3) throw StateError("3-tangle needs a three-qubit state");
  require_unit(s);
  Tangle3Report r;
  r.via_f3_1 = measure(catalog().get("F3_1"), s, opts).modulus;
  r.via_f3_2 = measure(catalog().get("F3_2"), s, opts).modulus;
  r.via_cayley = cayley_tangle(s);
  return r;
}

namespace {

struct ConditionScan {
  bool condition_i = true;
  std::vector<QubitSubset> i_failures;
  bool condition_i_strong = true;
  std::vector<QubitSubset> strong_failures;
  bool condition_ii = true;
  std::vector<PairConcurrence> pairs;
  std::vector<SubsetResult> subsets;
};

ConditionScan scan_conditions(const PureState& s, double tol, double rank_tol) {
  ConditionScan out;
  const int q = s.num_qubits();
  for (const QubitSubset& subset : proper_subsets(q)) {
    const DensityMatrix rho = reduced_density(s, subset);
    const auto spectrum = hermitian_spectrum(rho);
    SubsetResult sr{subset, 0, {}};
    for (double v : spectrum) {
      if (v > rank_tol) sr.nonzero_spectrum.push_back(v);
    }
    sr.rank = static_cast<int>(sr.nonzero_spectrum.size());
    const double flat = 1.0 / sr.rank;
    const bool is_flat = std::all_of(sr.nonzero_spectrum.begin(), sr.nonzero_spectrum.end(),
                                     [&](double v) { return std::abs(v - flat) < tol; });
    if (sr.rank <= 2) {
      const bool halves =
          sr.rank == 2 && std::all_of(sr.nonzero_spectrum.begin(), sr.nonzero_spectrum.end(),
                                      [&](double v) { return std::abs(v - 0.5) < tol; });
      if (!halves) {
        out.condition_i = false;
        out.i_failures.push_back(subset);
      }
    }
    if (!is_flat) {
      out.condition_i_strong = false;
      out.strong_failures.push_back(subset);
    }
    if (subset.size() == 2 && q >= 3) {
      const double c = concurrence_mixed(rho);
      out.pairs.push_back({subset, c});
      if (!(c < tol)) out.condition_ii = false;
    }
    out.subsets.push_back(std::move(sr));
  }
  return out;
}

}  // namespace

MaxEntReport classify_max_entanglement(const PureState& input, double tol, std::uint64_t seed,
                                       std::size_t phase_trials, const std::string& name,
                                       double rank_tol) {
  const int q = input.num_qubits();
  if (q < 2 || q > 6) throw StateError("classifier supports 2 to 6 qubits");
  const PureState s = input.normalized();

  MaxEntReport r;
  r.state = name;
  r.num_qubits = q;
  r.tolerance = tol;
  ConditionScan base = scan_conditions(s, tol, rank_tol);
  r.condition_i = base.condition_i;
  r.condition_i_failures = base.i_failures;
  r.condition_i_strong = base.condition_i_strong;
  r.condition_i_strong_failures = base.strong_failures;
  r.condition_ii_p2 = base.condition_ii;
  r.pairs = base.pairs;
  r.subsets = base.subsets;
  for (int p = 3; p < q; ++p) r.not_evaluable_p.push_back(p);
  if (!r.not_evaluable_p.empty()) {
    r.notes.push_back("condition (ii) for p >= 3 not evaluable: no operational mixed p-tangle");
  }
  if (name == "psi6") {
    r.notes.push_back(
        "psi6 is documented to carry four-tangle (F4_3); a four-qubit filter has no defined "
        "value on a mixed 4-site reduction, so this is not evaluated");
  }

  // (iii): random phases on the canonical-form components.
  r.phase_trials = phase_trials;
  r.condition_iii = true;
  const Rng root(seed);
  for (std::size_t t = 0; t < phase_trials && r.condition_iii; ++t) {
    Rng rng = root.fork(t);
    std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (auto& a : amps) {
      if (std::abs(a) > 1e-14) a *= std::polar(1.0, rng.angle());
    }
    const PureState phased = PureState(q, std::move(amps)).normalized();
    const ConditionScan scan = scan_conditions(phased, tol, rank_tol);
    bool same = scan.condition_i == base.condition_i && scan.condition_ii == base.condition_ii;
    for (std::size_t k = 0; same && k < scan.pairs.size(); ++k) {
      same = std::abs(scan.pairs[k].concurrence - base.pairs[k].concurrence) < tol;
    }
    r.condition_iii = same;
  }
  return r;
}

nlohmann::json MaxEntReport::to_json() const {
  auto subsets_json = [](const std::vector<QubitSubset>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& s : v) a.push_back(subset_json(s));
    return a;
  };
  nlohmann::json pairs_json = nlohmann::json::array();
  for (const auto& p : pairs) {
    pairs_json.push_back({{"subset", subset_json(p.subset)}, {"concurrence", p.concurrence}});
  }
  return {
      {"state", state},
      {"qubits", num_qubits},
      {"tolerance", tolerance},
      {"condition_i", {{"pass", condition_i}, {"failures", subsets_json(condition_i_failures)}}},
      {"condition_i_strong",
       {{"pass", condition_i_strong}, {"failures", subsets_json(condition_i_strong_failures)}}},
      {"condition_ii_p2",
       {{"pass", condition_ii_p2}, {"pairs", pairs_json}, {"not_evaluable_p", not_evaluable_p}}},
      {"condition_iii", {{"pass", condition_iii}, {"trials", phase_trials}}},
      {"notes", notes},
  };
}

}  // namespace tangle
