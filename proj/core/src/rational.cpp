#include "kforge/rational.hpp"

#include <cctype>

#include "kforge/error.hpp"

namespace kforge {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t end = digits(i);
  if (end == i) throw SyntaxError(i, "digits");
  Integer num(text.substr(i, end - i), 10);
  Integer den = 1;
  if (end < text.size()) {
    if (text[end] != '/') throw SyntaxError(end, "'/' or end of number");
    const std::size_t start = end + 1;
    end = digits(start);
    if (end == start) throw SyntaxError(start, "digits");
    den = Integer(text.substr(start, end - start), 10);
    if (den == 0) throw DomainError("rational with zero denominator");
    if (end != text.size()) throw SyntaxError(end, "end of number");
  }
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_wire(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Rational from_wire(const std::string& text) { return parse_rational(text); }

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

template <class Var>
std::string Polynomial<Var>::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    const bool negative = v < 0;
    if (negative) v = -v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = v == 1 && i > 0;
    if (!unit) out += kforge::to_string(v);
    if (i > 0) {
      if (!unit) out += "*";
      out += Var::name;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

template class Polynomial<TVariable>;
template class Polynomial<DVariable>;

PolyT squarefree_part(const PolyT& p) {
  if (p.degree() <= 0) return p;
  const PolyT g = gcd(p, p.derivative());
  PolyT q = divmod(p, g).first;
  return (Rational(1) / q.leading()) * q;
}

}  // namespace kforge
