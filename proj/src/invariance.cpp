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

#include "tangle/invariance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tangle/parallel.hpp"
#include "tangle/states.hpp"

namespace tangle {

cplx det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

LocalOperator LocalOperator::identity(int num_qubits, Kind kind) {
  return {kind, std::vector<Mat2>(num_qubits, Mat2{1.0, 0.0, 0.0, 1.0})};
}

bool LocalOperator::satisfies_invariant(double tol) const {
  for (const Mat2& a : factors) {
    if (std::abs(det(a) - 1.0) >= tol) return false;
    if (kind == Kind::Unitary) {
      // A^dagger A - I, entry by entry.
      const cplx m00 = std::conj(a[0]) * a[0] + std::conj(a[2]) * a[2] - 1.0;
      const cplx m01 = std::conj(a[0]) * a[1] + std::conj(a[2]) * a[3];
      const cplx m11 = std::conj(a[1]) * a[1] + std::conj(a[3]) * a[3] - 1.0;
      if (std::abs(m00) >= tol || std::abs(m01) >= tol || std::abs(m11) >= tol) return false;
    }
  }
  return true;
}

LocalOperator random_det_one(int num_qubits, Rng& rng) {
  LocalOperator op{LocalOperator::Kind::DetOne, {}};
  for (int j = 0; j < num_qubits; ++j) {
    Mat2 a;
    cplx d;
    do {
      for (auto& x : a) x = rng.unit_square();
      d = det(a);
    } while (std::abs(d) < 0.1);
    const cplx root = std::sqrt(d);
    for (auto& x : a) x /= root;
    op.factors.push_back(a);
  }
  return op;
}

LocalOperator random_local_unitary(int num_qubits, Rng& rng) {
  LocalOperator op{LocalOperator::Kind::Unitary, {}};
  for (int j = 0; j < num_qubits; ++j) {
    std::array<cplx, 2> u, v;
    double nu = 0.0;
    do {
      u = {rng.complex_normal(), rng.complex_normal()};
      nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]));
    } while (nu < 1e-6);
    u[0] /= nu;
    u[1] /= nu;
    double nv = 0.0;
    do {
      v = {rng.complex_normal(), rng.complex_normal()};
      const cplx overlap = std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
      v[0] -= overlap * u[0];
      v[1] -= overlap * u[1];
      nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    } while (nv < 1e-6);
    v[0] /= nv;
    v[1] /= nv;
    Mat2 a{u[0], v[0], u[1], v[1]};  // columns u, v
    const cplx root = std::sqrt(det(a));
    for (auto& x : a) x /= root;
    op.factors.push_back(a);
  }
  return op;
}

PureState apply_local(const LocalOperator& op, const PureState& s) {
  if (op.num_qubits() != s.num_qubits()) {
    throw StateError("local operator acts on " + std::to_string(op.num_qubits()) +
                     " qubits, state has " + std::to_string(s.num_qubits()));
  }
  std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
  const int q = s.num_qubits();
  for (int j = 0; j < q; ++j) {
    const Mat2& a = op.factors[j];
    const std::size_t bit = qubit_bit(q, j);
    for (std::size_t b = 0; b < amps.size(); ++b) {
      if (b & bit) continue;
      const cplx x0 = amps[b];
      const cplx x1 = amps[b | bit];
      amps[b] = a[0] * x0 + a[1] * x1;
      amps[b | bit] = a[2] * x0 + a[3] * x1;
    }
  }
  return PureState(q, std::move(amps));
}

nlohmann::json CheckReport::to_json() const {
  return {{"filter", filter},   {"check", check}, {"trials", trials},
          {"worst_deviation", worst_deviation}, {"pass", pass},
          {"tolerance", tolerance}, {"seed", seed}, {"worst_trial", worst_trial}};
}

double invariance_deviation(cplx reference, cplx transformed, double transformed_norm_sq,
                            std::size_t degree) {
  const double scale =
      std::max(std::abs(reference), std::pow(transformed_norm_sq, static_cast<double>(degree) / 2.0));
  return std::abs(transformed - reference) / std::max(scale, 1e-300);
}

namespace {

template <class TrialFn>
CheckReport run_trials(std::string filter, std::string check, std::size_t trials,
                       std::uint64_t seed, double tol, unsigned workers, TrialFn&& trial) {
  std::vector<double> deviations(trials, 0.0);
  parallel_for(trials, std::max(1u, workers), [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng = Rng(seed).fork(t);
      deviations[t] = trial(t, rng);
    }
  });
  CheckReport r;
  r.filter = std::move(filter);
  r.check = std::move(check);
  r.trials = trials;
  r.tolerance = tol;
  r.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    if (t == 0 || std::isnan(deviations[t]) || deviations[t] > r.worst_deviation) {
      r.worst_deviation = deviations[t];
      r.worst_trial = t;
      if (std::isnan(deviations[t])) break;
    }
  }
  r.pass = !std::isnan(r.worst_deviation) && r.worst_deviation < tol;
  return r;
}

// Evaluation inside a trial runs single-threaded; the trials are the fan-out.
EvalOptions single(const EvalOptions& opts) {
  EvalOptions o = opts;
  o.workers = 1;
  return o;
}

}  // namespace

CheckReport check_sl_invariance(const FilterDef& f, const PureState& s, std::size_t trials,
                                std::uint64_t seed, double tol, const EvalOptions& opts) {
  const EvalOptions inner = single(opts);
  const ContractionPlan plan = make_plan(f);
  const cplx reference = eval_planned(f, plan, s, inner);
  return run_trials(f.name, "slocc", trials, seed, tol, opts.workers,
                    [&](std::size_t, Rng& rng) {
                      const PureState moved = apply_local(random_det_one(s.num_qubits(), rng), s);
                      const cplx v = eval_planned(f, plan, moved, inner);
                      return invariance_deviation(reference, v, moved.norm_sq(), f.degree());
                    });
}

CheckReport check_lu_invariance(const FilterDef& f, const PureState& s, std::size_t trials,
                                std::uint64_t seed, double tol, const EvalOptions& opts) {
  const EvalOptions inner = single(opts);
  const ContractionPlan plan = make_plan(f);
  const PureState unit = s.normalized();
  const double reference = std::abs(eval_planned(f, plan, unit, inner));
  return run_trials(f.name, "local-unitary", trials, seed, tol, opts.workers,
                    [&](std::size_t, Rng& rng) {
                      const PureState moved =
                          apply_local(random_local_unitary(s.num_qubits(), rng), unit).normalized();
                      const double v = std::abs(eval_planned(f, plan, moved, inner));
                      return std::abs(v - reference) / std::max(reference, 1.0);
                    });
}

CheckReport check_product_vanishing(const FilterDef& f, std::size_t trials, std::uint64_t seed,
                                    double tol, const EvalOptions& opts) {
  const EvalOptions inner = single(opts);
  const ContractionPlan plan = make_plan(f);
  const int q = f.num_qubits;
  std::vector<std::vector<std::vector<int>>> shapes;
  for (auto& p : set_partitions(q)) {
    if (p.size() >= 2) shapes.push_back(std::move(p));
  }
  return run_trials(f.name, "product", trials, seed, tol, opts.workers,
                    [&](std::size_t t, Rng& rng) {
                      const PureState s = shapes.empty()
                                              ? random_pure(q, rng)
                                              : random_product_groups(shapes[t % shapes.size()], q, rng);
                      return std::abs(eval_planned(f, plan, s, inner));
                    });
}

CheckReport check_homogeneity(const FilterDef& f, const PureState& s, std::size_t trials,
                              std::uint64_t seed, double tol, const EvalOptions& opts) {
  const EvalOptions inner = single(opts);
  const ContractionPlan plan = make_plan(f);
  const cplx reference = eval_planned(f, plan, s, inner);
  return run_trials(f.name, "homogeneity", trials, seed, tol, opts.workers,
                    [&](std::size_t, Rng& rng) {
                      // |lambda| in [0.5, 1.5) keeps lambda^(2n) well inside range.
                      const double radius = 0.5 + rng.uniform();
                      const cplx lambda = std::polar(radius, rng.angle());
                      const cplx expected =
                          std::pow(std::conj(lambda), static_cast<int>(f.degree())) * reference;
                      const cplx v = eval_planned(f, plan, s.scaled(lambda), inner);
                      const double scale =
                          std::max(std::abs(expected),
                                   std::pow(radius * radius * s.norm_sq(),
                                            static_cast<double>(f.degree()) / 2.0));
                      return std::abs(v - expected) / scale;
                    });
}

nlohmann::json PermutationReport::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (const cplx& v : distinct_values) values.push_back({v.real(), v.imag()});
  return {{"filter", filter},         {"check", "perm"},   {"permutations", permutations},
          {"distinct_values", values}, {"asserted", asserted}, {"pass", pass},
          {"tolerance", tolerance}};
}

PermutationReport check_permutation_invariance(const FilterDef& f, const PureState& s,
                                               double tol, const EvalOptions& opts) {
  PermutationReport r;
  r.filter = f.name;
  r.tolerance = tol;
  r.asserted = f.name == "F2_2" || f.name == "F3_2";
  const ContractionPlan plan = make_plan(f);
  std::vector<int> perm(s.num_qubits());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ++r.permutations;
    const cplx v = eval_planned(f, plan, s.permuted(perm), opts);
    const bool known = std::any_of(r.distinct_values.begin(), r.distinct_values.end(),
                                   [&](cplx d) { return std::abs(d - v) <= tol; });
    if (!known) r.distinct_values.push_back(v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.pass = !r.asserted || r.distinct_values.size() == 1;
  return r;
}

}  // namespace tangle
