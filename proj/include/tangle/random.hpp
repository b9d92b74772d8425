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
#include <cstdint>
#include <random>

namespace tangle {

/**
 * Seeded random source. The engine is std::mt19937_64, whose output
 * sequence is fixed by the standard, and every derived sample is computed
 * here rather than by <random> distributions, so a seed reproduces the same
 * bits on every platform.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Standard normal via Box-Muller (one value per call, no caching).
  double normal();
  /// Independent standard normals in the real and imaginary parts.
  std::complex<double> complex_normal();
  /// Uniform over the unit square [0,1) x [0,1) of the complex plane.
  std::complex<double> unit_square() {
    const double re = uniform();
    return {re, uniform()};
  }
  /// Uniform phase angle in [0, 2 pi).
  double angle();

  /// Independent stream for trial `index`: seed XOR index.
  Rng fork(std::uint64_t index) const { return Rng(seed_ ^ index); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tangle
