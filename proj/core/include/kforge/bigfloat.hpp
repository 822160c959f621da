#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "kforge/rational.hpp"

namespace kforge {

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Binary floating point at a stated precision, rounding to nearest.
/// Binary operations produce a result at the smaller of the two operand
/// precisions; mixing with a machine integer keeps the BigFloat's precision.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision_bits = kDefaultPrecisionBits);
  BigFloat(long value, unsigned precision_bits);
  BigFloat(const Rational& value, unsigned precision_bits);
  BigFloat(double value, unsigned precision_bits);
  /// Decimal (or scientific) literal such as "-1.25e-3".
  static BigFloat from_decimal(const std::string& text, unsigned precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision_bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  /// Same value rounded to a different precision.
  BigFloat with_precision(unsigned precision_bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Fixed-point rendering with `digits` significant decimal digits.
  std::string to_string(int digits) const;
  /// Rendering with as many digits as the precision supports.
  std::string to_string() const;
  /// Exact rational value of the stored binary float.
  Rational to_rational() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1 (very negative for zero).
  long exponent() const;
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator+(const BigFloat& a, long b);
  friend BigFloat operator-(const BigFloat& a, long b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator+(long a, const BigFloat& b) { return b + a; }
  friend BigFloat operator-(long a, const BigFloat& b) { return -(b - a); }
  friend BigFloat operator/(long a, const BigFloat& b);

  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat ldexp(const BigFloat& x, long e);  // x * 2^e
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat pi(unsigned precision_bits);
/// 2^(-bits) at the given precision.
BigFloat epsilon(long bits, unsigned precision_bits);

/// Minimal complex number over BigFloat, enough for principal-branch log c
/// and c^s bookkeeping.
struct Complex {
  BigFloat re;
  BigFloat im;

  Complex() = default;
  explicit Complex(BigFloat real) : re(real), im(0L, real.precision_bits()) {}
  Complex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  unsigned precision_bits() const { return std::min(re.precision_bits(), im.precision_bits()); }
  bool is_real() const { return im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const BigFloat& b) { return {a.re * b, a.im * b}; }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const BigFloat& b) { return {a.re / b, a.im / b}; }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

BigFloat abs(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch: imaginary part in (-pi, pi].
Complex log(const Complex& z);
/// z^s = exp(s log z) on the principal branch.
Complex pow(const Complex& z, const Complex& s);
Complex pow(const Complex& z, long n);

}  // namespace kforge
