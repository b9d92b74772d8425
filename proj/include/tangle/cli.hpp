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

#include <iosfwd>
#include <string>
#include <vector>

#include "tangle/eval.hpp"
#include "tangle/filter_ir.hpp"

namespace tangle {

inline constexpr const char* kVersion = "0.1.0";

/// r * sqrt(3)^sqrt3_power.
struct ExactValue {
  Rational r{0};
  int sqrt3_power = 0;

  double value() const;
  std::string to_string() const;
};

struct TableRow {
  std::string filter;
  std::string state;
  int length = 0;
  ExactValue expected;
  cplx computed;
  /// Normalization variant tag for the length-7 row ("unit", "printed", ...).
  std::string variant;
  /// Informational rows are reported but never decide pass/fail.
  bool informational = false;

  double abs_error() const { return std::abs(std::abs(computed) - expected.value()); }
};

std::vector<TableRow> compute_table(const EvalOptions& opts = {});

/**
 * PASS iff every non-informational row matches within tol, except that the
 * F6_2 length-7 entry needs only one of its two normalization variants.
 */
bool table_passes(const std::vector<TableRow>& rows, double tol);

/// Full command line (args[0] is the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tangle
