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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace tangle::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(TANGLE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("TANGLE_KERNEL")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (available(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) {
    throw std::invalid_argument("kernel ISA '" + std::string(isa_name(isa)) +
                                "' is not available on this machine");
  }
#if defined(TANGLE_HAVE_AVX2)
  if (isa == Isa::Avx2) return detail::kAvx2Table;
#endif
  return detail::kScalarTable;
}

Isa best_isa() {
  static const Isa chosen = detect();
  return chosen;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "auto") return best_isa();
  throw std::invalid_argument("unknown kernel ISA '" + std::string(name) + "'");
}

}  // namespace tangle::kernels
