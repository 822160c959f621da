#include "expression_parser.hpp"
#include "kforge/operator.hpp"

namespace kforge {

namespace {

struct OperatorRing {
  using Value = Operator;

  Value constant(const Rational& q) { return Operator::constant(q); }

  Value identifier(const std::string& name, std::size_t at) {
    if (name == "t") return Operator::t();
    if (name == "D") return Operator::D();
    throw SyntaxError(at, "'t', 'D', a number or '('");
  }

  Value power(const Value& base, long e, bool, std::size_t at) {
    if (e < 0) throw NonPolynomialError("negative exponent at position " + std::to_string(at));
    Value out = Operator::constant(1);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  Value divide(const Value& a, const Value& b, std::size_t at) {
    if (b.order() == 0 && b.degree() == 0 && !b.is_zero()) return (Rational(1) / b.coeff(0, 0)) * a;
    throw NonPolynomialError("division by a non-constant at position " + std::to_string(at));
  }
};

}  // namespace

Operator parse_operator(const std::string& text) {
  OperatorRing ring;
  return detail::ExpressionParser<OperatorRing>(text, ring).parse();
}

}  // namespace kforge
