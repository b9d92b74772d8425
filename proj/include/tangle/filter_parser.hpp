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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/filter_ir.hpp"

namespace tangle {

/**
 * Parse failure with a 1-based source position. Validation failures
 * (pairing, slot counts) are reported at the offending block or slot.
 */
class ParseError : public Error {
 public:
  enum class Kind {
    SyntaxError,
    UnpairedLabel,
    DuplicateLabelInBlock,
    SlotCountMismatch,
    EmptyFilter,
    BadPrefactor,
  };

  ParseError(Kind kind, std::string message, int line, int column);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// Message without the "line:column:" prefix.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string detail_;
};

const char* to_string(ParseError::Kind kind);

/**
 * Filter text grammar:
 *
 *   file     := filter+
 *   filter   := "filter" IDENT "{" "qubits:" INT ";" "prefactor:" INT "/" INT ";"
 *               block+ "}"
 *   block    := "block" "[" slot ("," slot)* "]"
 *   slot     := "id" | "x" | "y" | "z" | LABEL | "^" LABEL
 *
 * LABEL is a lowercase identifier; "#" comments run to end of line.
 */
std::vector<FilterDef> parse_filters(std::string_view source);

/// Canonical text: one block per line, labels renamed m, n, l, t, r1, r2, ...
std::string serialize(const FilterDef& f);
std::string serialize(std::span<const FilterDef> filters);

std::vector<FilterDef> load_filter_file(const std::string& path);

}  // namespace tangle
