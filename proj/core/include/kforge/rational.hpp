#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace kforge {

/// Exact rational; gmpxx keeps results of arithmetic in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);  // "n", "-n", "n/d"

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
/// Always "n/d" (the stable wire format for sequences).
std::string to_wire(const Rational& q);
Rational from_wire(const std::string& text);

Rational rational_pow(const Rational& base, unsigned long exponent);

struct TVariable {
  static constexpr const char* name = "t";
};
struct DVariable {
  static constexpr const char* name = "D";
};

/// Dense univariate polynomial over Q with trailing zeros trimmed; the zero
/// polynomial has no coefficients. The tag keeps polynomials in t and in the
/// symbol D from being mixed up.
template <class Var>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  static Polynomial monomial(std::size_t degree, const Rational& v = 1) {
    std::vector<Rational> c(degree + 1);
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// Coefficients of p(x0 + y) as a polynomial in y.
  Polynomial shifted(const Rational& x0) const {
    std::vector<Rational> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += x0 * a[j];
    return Polynomial(std::move(a));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns {quotient, remainder}.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r = a.c_;
    const long db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (long i = a.degree(); i >= db; --i) {
      const Rational f = r[static_cast<std::size_t>(i)] / b.leading();
      q[static_cast<std::size_t>(i - db)] = f;
      for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  /// Monic greatest common divisor (zero if both are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
  }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

using PolyT = Polynomial<TVariable>;
using PolyD = Polynomial<DVariable>;

/// Square-free part p / gcd(p, p'), made monic.
PolyT squarefree_part(const PolyT& p);

}  // namespace kforge
