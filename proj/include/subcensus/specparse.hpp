#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subcensus/grouptable.hpp"

namespace subcensus {

/// Parse failure with the byte offset of the offending token.
struct ParseError : std::runtime_error {
  int offset;
  ParseError(int off, const std::string& what)
      : std::runtime_error("syntax error at offset " + std::to_string(off) + ": " + what),
        offset(off) {}
};

/// Grammar for group construction expressions:
///   expr    := term  ( 'x' term )*          direct product, left-assoc
///   term    := factor ( '*' factor )*       central product, left-assoc
///   factor  := primary ( '^' power )*       power := INT | '{' '*' INT '}'
///   primary := C2 | C4 | C8 | D8 | Q8 | '(' expr ')'
/// `C2^m` denotes the elementary abelian group of rank m.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(static_cast<int>(pos_), "trailing input");
    return s;
  }

 private:
  GroupSpec parse_expr() {
    GroupSpec left = parse_term();
    while (peek_word("x")) {
      consume_word("x");
      left = GroupSpec::direct(std::move(left), parse_term());
    }
    return left;
  }

  GroupSpec parse_term() {
    GroupSpec left = parse_factor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        left = GroupSpec::central(std::move(left), parse_factor());
      } else {
        break;
      }
    }
    return left;
  }

  GroupSpec parse_factor() {
    GroupSpec base = parse_primary();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '^') break;
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '{') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '*')
          throw ParseError(static_cast<int>(pos_), "expected '*' in central power");
        ++pos_;
        const int k = parse_int();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '}')
          throw ParseError(static_cast<int>(pos_), "expected '}'");
        ++pos_;
        base = GroupSpec::central_power(std::move(base), k);
      } else {
        const int k = parse_int();
        if (base.kind == GroupSpec::Kind::kLeaf && base.leaf == GroupSpec::Leaf::kC2)
          base = GroupSpec::elementary(k);
        else
          base = GroupSpec::direct_power(std::move(base), k);
      }
    }
    return base;
  }

  GroupSpec parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(static_cast<int>(pos_), "expected a group atom");
    if (text_[pos_] == '(') {
      ++pos_;
      GroupSpec inner = parse_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError(static_cast<int>(pos_), "expected ')'");
      ++pos_;
      return inner;
    }
    // Atoms are one letter plus digits, so `C4xC2` lexes as three tokens.
    const std::size_t start = pos_;
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "C2") return GroupSpec::atom(GroupSpec::Leaf::kC2);
    if (word == "C4") return GroupSpec::atom(GroupSpec::Leaf::kC4);
    if (word == "C8") return GroupSpec::atom(GroupSpec::Leaf::kC8);
    if (word == "D8") return GroupSpec::atom(GroupSpec::Leaf::kD8);
    if (word == "Q8") return GroupSpec::atom(GroupSpec::Leaf::kQ8);
    throw ParseError(static_cast<int>(start),
                     word.empty() ? "expected a group atom"
                                  : "unknown atom '" + std::string(word) + "'");
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1 << 20) throw ParseError(static_cast<int>(start), "number too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(static_cast<int>(start), "expected a number");
    if (value < 1) throw ParseError(static_cast<int>(start), "power must be positive");
    return static_cast<int>(value);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t after = pos_ + w.size();
    // Atoms are uppercase-led, so a following uppercase letter or digit still
    // reads as an operator boundary; only a longer lowercase word does not.
    return after >= text_.size() || !std::islower(static_cast<unsigned char>(text_[after]));
  }

  void consume_word(std::string_view w) {
    skip_ws();
    pos_ += w.size();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace subcensus
