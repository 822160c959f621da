#pragma once

#include <cctype>
#include <string>

#include "kforge/error.hpp"
#include "kforge/rational.hpp"

namespace kforge::detail {

// Recursive-descent parser shared by the operator and Laurent languages.
//
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"/") unary)*
//   unary  := "-" unary | factor
//   factor := atom ("^" ["-"] natural)?
//   atom   := identifier | rational | "(" expr ")"
//
// The Ring policy supplies constants, identifiers, powers and division by a
// constant; it decides which of those are legal.
template <class Ring>
class ExpressionParser {
 public:
  using Value = typename Ring::Value;

  ExpressionParser(const std::string& text, Ring& ring) : s_(text), ring_(ring) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "operator or end of input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    if (!at_digit()) throw SyntaxError(pos_, "digits");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        v = ring_.divide(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return ring_.constant(Rational(-1)) * unary();
    return factor();
  }

  Value factor() {
    skip();
    const std::size_t at = pos_;
    bool identifier = false;
    Value base = atom(identifier);
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const std::size_t exp_at = pos_;
    const std::string d = digits();
    if (d.size() > 6) throw SyntaxError(exp_at, "exponent below 10^6");
    const long e = std::stol(d);
    return ring_.power(base, negative ? -e : e, identifier, at);
  }

  Value atom(bool& identifier) {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "operand");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = digits();
      const std::size_t save = pos_;
      if (accept('/') && at_digit()) {
        const std::size_t den_at = pos_;
        const std::string den = digits();
        if (Integer(den, 10) == 0) throw NonPolynomialError("division by zero at position " + std::to_string(den_at));
        text += "/" + den;
      } else {
        pos_ = save;
      }
      return ring_.constant(parse_rational(text));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      identifier = true;
      return ring_.identifier(s_.substr(start, pos_ - start), start);
    }
    throw SyntaxError(pos_, "number, identifier or '('");
  }

  const std::string& s_;
  Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace kforge::detail
