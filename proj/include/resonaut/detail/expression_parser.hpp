#pragma once

#include "resonaut/exactnum.hpp"

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

namespace resonaut::detail {

/// Recursive-descent parser for sums of products over a commutative ring:
///
///   expr    := [+|-] term { (+|-) term }
///   term    := factor { * factor }
///   factor  := primary [ ^ integer ]
///   primary := number [ / number ] | identifier | ( expr )
///
/// Identifiers are [A-Za-z_][A-Za-z0-9_,]* and resolved by the caller.
template <class Value>
class ExpressionParser {
public:
  using FromRational = std::function<Value(const Rational&)>;
  using FromIdentifier = std::function<Value(const std::string&)>;

  ExpressionParser(std::string_view text, FromRational from_rational, FromIdentifier from_identifier)
      : text_(text), from_rational_(std::move(from_rational)),
        from_identifier_(std::move(from_identifier)) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("parse error at offset " + std::to_string(pos_) + " in \"" +
                          std::string(text_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Value acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Value term() {
    Value acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Value factor() {
    Value base = primary();
    if (accept('^')) {
      skip_space();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      long e = std::stol(digits);
      Value result = from_rational_(Rational(1));
      for (long i = 0; i < e; ++i) result = result * base;
      return result;
    }
    return base;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out.push_back(text_[pos_++]);
    return out;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        num += "/" + den;
      }
      return from_rational_(parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == ',') {
          id.push_back(d);
          ++pos_;
        } else {
          break;
        }
      }
      return from_identifier_(id);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  FromRational from_rational_;
  FromIdentifier from_identifier_;
};

}  // namespace resonaut::detail
