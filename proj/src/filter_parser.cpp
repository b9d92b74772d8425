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

#include "tangle/filter_parser.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace tangle {

ParseError::ParseError(Kind kind, std::string message, int line, int column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(std::move(message)) {}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::SyntaxError:
      return "SyntaxError";
    case ParseError::Kind::UnpairedLabel:
      return "UnpairedLabel";
    case ParseError::Kind::DuplicateLabelInBlock:
      return "DuplicateLabelInBlock";
    case ParseError::Kind::SlotCountMismatch:
      return "SlotCountMismatch";
    case ParseError::Kind::EmptyFilter:
      return "EmptyFilter";
    case ParseError::Kind::BadPrefactor:
      return "BadPrefactor";
  }
  return "ParseError";
}

namespace {

struct Token {
  enum class Type { Ident, Int, Punct, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int column = 1;

  bool is(char c) const { return type == Type::Punct && text.size() == 1 && text[0] == c; }
  bool is_word(std::string_view w) const { return type == Type::Ident && text == w; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Type::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text += advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.type = Token::Type::Int;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text += advance();
      }
    } else if (std::string_view("{}[],;:/^-").find(c) != std::string_view::npos) {
      t.type = Token::Type::Punct;
      t.text = advance();
    } else {
      throw ParseError(ParseError::Kind::SyntaxError,
                       std::string("unexpected character '") + c + "'", line_, column_);
    }
    return t;
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_label(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return s != "id" && s != "x" && s != "y" && s != "z";
}

std::string describe(const Token& t) {
  switch (t.type) {
    case Token::Type::End:
      return "end of input";
    case Token::Type::Int:
      return "integer " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

struct Position {
  int line, column;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { current_ = lexer_.next(); }

  std::vector<FilterDef> parse_file() {
    std::vector<FilterDef> out;
    do {
      out.push_back(parse_filter());
    } while (current_.type != Token::Type::End);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::SyntaxError,
                     "expected " + what + ", found " + describe(current_), current_.line,
                     current_.column);
  }

  Token take() {
    Token t = current_;
    current_ = lexer_.next();
    return t;
  }

  void expect_punct(char c) {
    if (!current_.is(c)) fail(std::string("'") + c + "'");
    take();
  }

  void expect_word(std::string_view w) {
    if (!current_.is_word(w)) fail("'" + std::string(w) + "'");
    take();
  }

  std::int64_t expect_int() {
    if (current_.type != Token::Type::Int) fail("integer");
    const Token t = take();
    try {
      return std::stoll(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(ParseError::Kind::SyntaxError, "integer out of range", t.line, t.column);
    }
  }

  FilterDef parse_filter() {
    expect_word("filter");
    if (current_.type != Token::Type::Ident) fail("filter name");
    FilterDef f;
    const Token name = take();
    f.name = name.text;
    expect_punct('{');
    expect_word("qubits");
    expect_punct(':');
    const Token qtok = current_;
    const std::int64_t q = expect_int();
    if (q < 1 || q > 8) {
      throw ParseError(ParseError::Kind::EmptyFilter, "qubit count must be in [1, 8]",
                       qtok.line, qtok.column);
    }
    f.num_qubits = static_cast<int>(q);
    expect_punct(';');
    expect_word("prefactor");
    expect_punct(':');
    const Token ptok = current_;
    bool negative = false;
    if (current_.is('-')) {
      take();
      negative = true;
    }
    const std::int64_t num = expect_int();
    expect_punct('/');
    const std::int64_t den = expect_int();
    if (den == 0) {
      throw ParseError(ParseError::Kind::BadPrefactor, "prefactor denominator is zero",
                       ptok.line, ptok.column);
    }
    f.prefactor = Rational(negative ? -num : num, den);
    expect_punct(';');

    block_pos_.clear();
    slot_pos_.clear();
    if (current_.is('}')) {
      throw ParseError(ParseError::Kind::EmptyFilter, "filter has no blocks", current_.line,
                       current_.column);
    }
    if (!current_.is_word("block")) fail("'block'");
    while (current_.is_word("block")) parse_block(f);
    expect_punct('}');
    validate_with_positions(f);
    return f;
  }

  void parse_block(FilterDef& f) {
    const Token kw = take();
    block_pos_.push_back({kw.line, kw.column});
    slot_pos_.emplace_back();
    expect_punct('[');
    Block b;
    parse_slot(b);
    while (current_.is(',')) {
      take();
      parse_slot(b);
    }
    expect_punct(']');
    if (b.slots.size() != static_cast<std::size_t>(f.num_qubits)) {
      throw ParseError(ParseError::Kind::SlotCountMismatch,
                       "block has " + std::to_string(b.slots.size()) + " slots, filter '" +
                           f.name + "' has " + std::to_string(f.num_qubits) + " qubits",
                       kw.line, kw.column);
    }
    f.blocks.push_back(std::move(b));
  }

  void parse_slot(Block& b) {
    slot_pos_.back().push_back({current_.line, current_.column});
    if (current_.is('^')) {
      take();
      if (current_.type != Token::Type::Ident || !is_label(current_.text)) fail("label after '^'");
      b.slots.push_back(Slot::upper(take().text));
      return;
    }
    if (current_.type != Token::Type::Ident) fail("slot (id, x, y, z, label or ^label)");
    const std::string& w = current_.text;
    std::optional<std::uint8_t> code;
    if (w == "id") code = 0;
    if (w == "x") code = 1;
    if (w == "y") code = 2;
    if (w == "z") code = 3;
    if (code) {
      take();
      b.slots.push_back(Slot::fixed(*code));
    } else if (is_label(w)) {
      b.slots.push_back(Slot::lower(take().text));
    } else {
      fail("slot (id, x, y, z, label or ^label)");
    }
  }

  void validate_with_positions(const FilterDef& f) {
    try {
      validate(f);
    } catch (const FilterError& e) {
      Position pos = block_pos_.empty() ? Position{current_.line, current_.column}
                                        : block_pos_.front();
      if (e.block() && *e.block() < block_pos_.size()) {
        pos = block_pos_[*e.block()];
        if (e.slot() && *e.slot() < slot_pos_[*e.block()].size()) {
          pos = slot_pos_[*e.block()][*e.slot()];
        }
      }
      throw ParseError(map_kind(e.kind()), e.what(), pos.line, pos.column);
    }
  }

  static ParseError::Kind map_kind(FilterError::Kind k) {
    switch (k) {
      case FilterError::Kind::UnpairedLabel:
        return ParseError::Kind::UnpairedLabel;
      case FilterError::Kind::DuplicateLabelInBlock:
        return ParseError::Kind::DuplicateLabelInBlock;
      case FilterError::Kind::SlotCountMismatch:
        return ParseError::Kind::SlotCountMismatch;
      case FilterError::Kind::BadPrefactor:
        return ParseError::Kind::BadPrefactor;
      default:
        return ParseError::Kind::EmptyFilter;
    }
  }

  Lexer lexer_;
  Token current_;
  std::vector<Position> block_pos_;
  std::vector<std::vector<Position>> slot_pos_;
};

std::string canonical_label(std::size_t k) {
  static const char* kFirst[] = {"m", "n", "l", "t"};
  if (k < 4) return kFirst[k];
  return "r" + std::to_string(k - 3);
}

}  // namespace

std::vector<FilterDef> parse_filters(std::string_view source) {
  return Parser(source).parse_file();
}

std::string serialize(const FilterDef& f) {
  static const char* kFixed[] = {"id", "x", "y", "z"};
  std::map<std::string, std::string> rename;
  for (const auto& l : f.labels()) rename.emplace(l, canonical_label(rename.size()));

  std::ostringstream out;
  out << "filter " << f.name << " { qubits: " << f.num_qubits
      << "; prefactor: " << f.prefactor.to_string() << ";\n";
  for (const auto& b : f.blocks) {
    out << "  block [";
    for (std::size_t i = 0; i < b.slots.size(); ++i) {
      if (i) out << ", ";
      const Slot& s = b.slots[i];
      switch (s.kind) {
        case Slot::Kind::Fixed:
          out << kFixed[s.code];
          break;
        case Slot::Kind::Lower:
          out << rename.at(s.label);
          break;
        case Slot::Kind::Upper:
          out << '^' << rename.at(s.label);
          break;
      }
    }
    out << "]\n";
  }
  out << "}\n";
  return out.str();
}

std::string serialize(std::span<const FilterDef> filters) {
  std::string out;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (i) out += "\n";
    out += serialize(filters[i]);
  }
  return out;
}

std::vector<FilterDef> load_filter_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_filters(ss.str());
}

}  // namespace tangle
