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

#include "tangle/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "tangle/parallel.hpp"

namespace tangle {

namespace {

std::size_t pow3(std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= 3;
  return r;
}

constexpr std::uint8_t kValueOfDigit[3] = {0, 1, 3};
constexpr double kSignOfDigit[3] = {-1.0, 1.0, 1.0};

struct LabelSlot {
  std::size_t label;
  std::uint32_t bit;    // qubit bit in the amplitude index
  unsigned pack_shift;  // 2 * (q - 1 - qubit)
};

struct CompiledBlock {
  std::uint32_t x_mask = 0;
  std::uint32_t z_mask = 0;
  int y_count = 0;
  std::uint32_t packed = 0;
  std::vector<LabelSlot> label_slots;
};

// Filter with label names resolved to indices and fixed slots folded into masks.
struct CompiledFilter {
  std::vector<std::string> labels;
  std::vector<CompiledBlock> blocks;
  double prefactor = 1.0;

  explicit CompiledFilter(const FilterDef& def) {
    const FilterDef f = validate(def);
    labels = f.labels();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    prefactor = f.prefactor.value();
    const int q = f.num_qubits;
    for (const auto& b : f.blocks) {
      CompiledBlock cb;
      for (int j = 0; j < q; ++j) {
        const Slot& s = b.slots[j];
        const std::uint32_t bit = qubit_bit(q, j);
        const unsigned shift = 2u * static_cast<unsigned>(q - 1 - j);
        if (s.kind == Slot::Kind::Fixed) {
          if (s.code == 1 || s.code == 2) cb.x_mask |= bit;
          if (s.code == 2 || s.code == 3) cb.z_mask |= bit;
          if (s.code == 2) ++cb.y_count;
          cb.packed |= static_cast<std::uint32_t>(s.code) << shift;
        } else {
          cb.label_slots.push_back({index.at(s.label), bit, shift});
        }
      }
      blocks.push_back(std::move(cb));
    }
  }
};

// Value of block `b` with labels bound to `values` (index values, not digits).
cplx block_value(const CompiledBlock& b, const std::uint8_t* values, const PureState& s,
                 ExpectationCache& cache, const kernels::KernelTable& k) {
  std::uint32_t x = b.x_mask, z = b.z_mask, packed = b.packed;
  for (const auto& ls : b.label_slots) {
    const std::uint8_t v = values[ls.label];
    if (v == 1) x |= ls.bit;
    if (v == 3) z |= ls.bit;
    packed |= static_cast<std::uint32_t>(v) << ls.pack_shift;
  }
  if (const cplx* hit = cache.find(packed)) return *hit;
  const cplx value = antilinear_expect_masks(s, x, z, b.y_count, k);
  cache.insert(packed, value);
  return value;
}

void check_qubits(const FilterDef& f, const PureState& s) {
  if (f.num_qubits != s.num_qubits()) {
    throw EvalError("QubitCountMismatch: filter '" + f.name + "' acts on " +
                    std::to_string(f.num_qubits) + " qubits, state has " +
                    std::to_string(s.num_qubits()));
  }
}

struct Compensated {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct ComplexSum {
  Compensated re, im;
  void add(cplx v) {
    re.add(v.real());
    im.add(v.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

struct Tensor {
  std::vector<std::string> labels;
  std::vector<cplx> data;
};

std::vector<std::string> block_labels(const FilterDef& f, std::size_t block) {
  std::vector<std::string> out;
  for (const auto& s : f.blocks[block].slots)
    if (s.is_label()) out.push_back(s.label);
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<std::size_t> strides(const std::vector<std::string>& labels) {
  std::vector<std::size_t> st(labels.size());
  std::size_t s = 1;
  for (std::size_t i = labels.size(); i-- > 0;) {
    st[i] = s;
    s *= 3;
  }
  return st;
}

std::size_t position(const std::vector<std::string>& labels, const std::string& x) {
  return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), x) - labels.begin());
}

Tensor merge(const Tensor& a, const Tensor& b, const MergeStep& step,
             const kernels::KernelTable& k, unsigned workers) {
  const auto& out_labels = step.result_labels;
  const auto& contracted = step.contracted;
  const auto sa = strides(a.labels);
  const auto sb = strides(b.labels);

  // Offsets of each contracted assignment in a and b, with its metric weight.
  const std::size_t nc = pow3(contracted.size());
  std::vector<std::size_t> coff_a(nc), coff_b(nc);
  std::vector<double> weight(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    std::size_t rem = c, oa = 0, ob = 0;
    double w = 1.0;
    for (std::size_t i = contracted.size(); i-- > 0;) {
      const std::size_t digit = rem % 3;
      rem /= 3;
      oa += digit * sa[position(a.labels, contracted[i])];
      ob += digit * sb[position(b.labels, contracted[i])];
      w *= kSignOfDigit[digit];
    }
    coff_a[c] = oa;
    coff_b[c] = ob;
    weight[c] = w;
  }

  const std::size_t nr = pow3(out_labels.size());
  std::vector<std::size_t> rstride_a(out_labels.size(), 0), rstride_b(out_labels.size(), 0);
  for (std::size_t i = 0; i < out_labels.size(); ++i) {
    if (contains(a.labels, out_labels[i])) {
      rstride_a[i] = sa[position(a.labels, out_labels[i])];
    } else {
      rstride_b[i] = sb[position(b.labels, out_labels[i])];
    }
  }

  Tensor out{out_labels, std::vector<cplx>(nr)};
  const unsigned use_workers = nr >= 729 ? workers : 1u;
  parallel_for(nr, use_workers, [&](std::size_t begin, std::size_t end, unsigned) {
    std::vector<cplx> ga(nc), gb(nc);
    for (std::size_t r = begin; r < end; ++r) {
      std::size_t rem = r, oa = 0, ob = 0;
      for (std::size_t i = out_labels.size(); i-- > 0;) {
        const std::size_t digit = rem % 3;
        rem /= 3;
        oa += digit * rstride_a[i];
        ob += digit * rstride_b[i];
      }
      for (std::size_t c = 0; c < nc; ++c) {
        ga[c] = a.data[oa + coff_a[c]];
        gb[c] = b.data[ob + coff_b[c]];
      }
      out.data[r] = k.weighted_dot(weight.data(), ga.data(), gb.data(), nc);
    }
  });
  return out;
}

}  // namespace

cplx BlockTensor::at(std::span<const std::uint8_t> values) const {
  if (values.size() != labels.size()) throw EvalError("index arity mismatch");
  std::size_t idx = 0;
  for (std::uint8_t v : values) {
    std::size_t digit = 0;
    switch (v) {
      case 0:
        digit = 0;
        break;
      case 1:
        digit = 1;
        break;
      case 3:
        digit = 2;
        break;
      default:
        throw EvalError("contracted index values are 0, 1 and 3");
    }
    idx = idx * 3 + digit;
  }
  return data[idx];
}

BlockTensor block_tensor(const FilterDef& f, std::size_t block, const PureState& s,
                         ExpectationCache& cache, kernels::Isa isa) {
  check_qubits(f, s);
  if (block >= f.blocks.size()) throw EvalError("block index out of range");
  if (!cache.bound_to(s)) throw StateError("expectation cache is bound to a different state");
  const CompiledFilter cf(f);
  const auto& k = kernels::table(isa);
  const CompiledBlock& cb = cf.blocks[block];

  BlockTensor t;
  t.block = block;
  t.labels = block_labels(f, block);
  const std::size_t rank = t.labels.size();
  t.data.resize(pow3(rank));
  std::vector<std::uint8_t> values(cf.labels.size(), 0);
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = rank; i-- > 0;) {
      values[cb.label_slots[i].label] = kValueOfDigit[rem % 3];
      rem /= 3;
    }
    t.data[idx] = block_value(cb, values.data(), s, cache, k);
  }
  return t;
}

cplx eval_brute(const FilterDef& f, const PureState& s, const EvalOptions& opts) {
  check_qubits(f, s);
  const CompiledFilter cf(f);
  const auto& k = kernels::table(opts.isa);
  const std::size_t num_labels = cf.labels.size();
  const std::size_t total = pow3(num_labels);
  const unsigned workers = std::max(1u, opts.workers);

  std::vector<ComplexSum> partial(workers);
  parallel_for(total, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    ExpectationCache cache(s);
    // Odometer over digits; label 0 is the most significant.
    std::vector<std::uint8_t> digits(num_labels, 0), values(num_labels, 0);
    std::size_t rem = begin;
    for (std::size_t i = num_labels; i-- > 0;) {
      digits[i] = static_cast<std::uint8_t>(rem % 3);
      values[i] = kValueOfDigit[digits[i]];
      rem /= 3;
    }
    ComplexSum acc;
    for (std::size_t a = begin; a < end; ++a) {
      double sign = 1.0;
      for (std::size_t i = 0; i < num_labels; ++i) sign *= kSignOfDigit[digits[i]];
      cplx term = sign;
      for (const auto& b : cf.blocks) {
        term *= block_value(b, values.data(), s, cache, k);
        if (term == cplx{}) break;
      }
      acc.add(term);
      for (std::size_t i = num_labels; i-- > 0;) {
        if (++digits[i] < 3) {
          values[i] = kValueOfDigit[digits[i]];
          break;
        }
        digits[i] = 0;
        values[i] = 0;
      }
    }
    partial[w] = acc;
  });

  ComplexSum total_sum;
  for (const auto& p : partial) {
    total_sum.re.add(p.re.sum);
    total_sum.re.add(p.re.comp);
    total_sum.im.add(p.im.sum);
    total_sum.im.add(p.im.comp);
  }
  return cf.prefactor * total_sum.value();
}

ContractionPlan make_plan(const FilterDef& def) {
  const FilterDef f = validate(def);
  ContractionPlan plan;
  plan.num_blocks = f.blocks.size();
  plan.brute_force_cost =
      std::pow(3.0, static_cast<double>(f.labels().size())) * static_cast<double>(f.blocks.size());

  struct Live {
    std::size_t id;
    std::vector<std::string> labels;
  };
  std::vector<Live> live;
  for (std::size_t b = 0; b < f.blocks.size(); ++b) live.push_back({b, block_labels(f, b)});

  std::size_t next_id = f.blocks.size();
  while (live.size() > 1) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_union = 0, best_shared = 0;
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        std::size_t shared = 0;
        for (const auto& l : live[i].labels) shared += contains(live[j].labels, l);
        const std::size_t uni = live[i].labels.size() + live[j].labels.size() - shared;
        if (!best || uni < best_union || (uni == best_union && shared > best_shared)) {
          best = {i, j};
          best_union = uni;
          best_shared = shared;
        }
      }
    }
    const auto [i, j] = *best;
    MergeStep step;
    step.lhs = live[i].id;
    step.rhs = live[j].id;
    for (const auto& l : live[i].labels) {
      (contains(live[j].labels, l) ? step.contracted : step.result_labels).push_back(l);
    }
    for (const auto& l : live[j].labels) {
      if (!contains(live[i].labels, l)) step.result_labels.push_back(l);
    }
    step.cost = std::pow(3.0, static_cast<double>(best_union));
    plan.estimated_cost += step.cost;

    Live merged{next_id++, step.result_labels};
    plan.steps.push_back(std::move(step));
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
    live.push_back(std::move(merged));
  }
  return plan;
}

cplx eval_planned(const FilterDef& f, const PureState& s, const EvalOptions& opts) {
  return eval_planned(f, make_plan(f), s, opts);
}

cplx eval_planned(const FilterDef& f, const ContractionPlan& plan, const PureState& s,
                  const EvalOptions& opts) {
  check_qubits(f, s);
  if (plan.num_blocks != f.blocks.size() || plan.steps.size() + 1 != f.blocks.size()) {
    throw EvalError("contraction plan does not match filter '" + f.name + "'");
  }
  const auto& k = kernels::table(opts.isa);
  const unsigned workers = std::max(1u, opts.workers);

  std::vector<std::optional<Tensor>> tensors(f.blocks.size() + plan.steps.size());
  parallel_for(f.blocks.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
    ExpectationCache cache(s);
    for (std::size_t b = begin; b < end; ++b) {
      BlockTensor bt = block_tensor(f, b, s, cache, opts.isa);
      tensors[b] = Tensor{std::move(bt.labels), std::move(bt.data)};
    }
  });

  std::size_t last = 0;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const MergeStep& step = plan.steps[i];
    if (!tensors.at(step.lhs) || !tensors.at(step.rhs)) {
      throw EvalError("contraction plan reuses a consumed tensor");
    }
    last = f.blocks.size() + i;
    tensors[last] = merge(*tensors[step.lhs], *tensors[step.rhs], step, k, workers);
    tensors[step.lhs].reset();
    tensors[step.rhs].reset();
  }
  const Tensor& result = *tensors[last];
  if (!result.labels.empty() || result.data.size() != 1) {
    throw EvalError("contraction left free labels");
  }
  return f.prefactor.value() * result.data[0];
}

Measurement measure(const FilterDef& f, const PureState& s, const EvalOptions& opts) {
  Measurement m;
  m.value = eval_planned(f, s, opts);
  m.modulus = std::abs(m.value);
  m.degree = f.degree();
  return m;
}

}  // namespace tangle
