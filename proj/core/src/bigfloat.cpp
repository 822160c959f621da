#include "kforge/bigfloat.hpp"

#include <algorithm>
#include <cmath>

#include "kforge/error.hpp"

namespace kforge {

namespace {

unsigned clamp_precision(unsigned bits) { return std::max<unsigned>(bits, MPFR_PREC_MIN); }

}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, unsigned precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, unsigned precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double value, unsigned precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat BigFloat::from_decimal(const std::string& text, unsigned precision_bits) {
  BigFloat out(precision_bits);
  char* end = nullptr;
  mpfr_strtofr(out.v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == nullptr || *end != '\0')
    throw SyntaxError(static_cast<std::size_t>(end ? end - text.c_str() : 0), "decimal number");
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(unsigned precision_bits) const {
  BigFloat out(precision_bits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  digits = std::max(digits, 2);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::to_string() const {
  return to_string(static_cast<int>(std::floor(precision_bits() * 0.30102999566398120)));
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite value has no rational form");
  Rational out;
  if (is_zero()) return out;
  mpz_t mant;
  mpz_init(mant);
  const mpfr_exp_t e = mpfr_get_z_2exp(mant, v_);
  out = Rational(Integer(mant));
  mpz_clear(mant);
  if (e >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

long BigFloat::exponent() const {
  if (is_zero() || !is_finite()) return mpfr_get_emin();
  return mpfr_get_exp(v_);
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision_bits());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

#define KFORGE_BINARY(op, fn)                                              \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {             \
    BigFloat out(std::min(a.precision_bits(), b.precision_bits()));        \
    fn(out.v_, a.v_, b.v_, MPFR_RNDN);                                     \
    return out;                                                            \
  }                                                                        \
  BigFloat operator op(const BigFloat& a, long b) {                        \
    BigFloat out(a.precision_bits());                                      \
    fn##_si(out.v_, a.v_, b, MPFR_RNDN);                                   \
    return out;                                                            \
  }

KFORGE_BINARY(+, mpfr_add)
KFORGE_BINARY(-, mpfr_sub)
KFORGE_BINARY(*, mpfr_mul)
KFORGE_BINARY(/, mpfr_div)

#undef KFORGE_BINARY

BigFloat operator/(long a, const BigFloat& b) {
  BigFloat out(b.precision_bits());
  mpfr_si_div(out.v_, a, b.v_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define KFORGE_UNARY(name, fn)                   \
  BigFloat name(const BigFloat& x) {             \
    BigFloat out(x.precision_bits());            \
    fn(out.get(), x.get(), MPFR_RNDN);           \
    return out;                                  \
  }

KFORGE_UNARY(abs, mpfr_abs)
KFORGE_UNARY(sqrt, mpfr_sqrt)
KFORGE_UNARY(exp, mpfr_exp)
KFORGE_UNARY(sin, mpfr_sin)
KFORGE_UNARY(cos, mpfr_cos)

#undef KFORGE_UNARY

BigFloat log(const BigFloat& x) {
  if (x <= 0L) throw DomainError("log of a non-positive real");
  BigFloat out(x.precision_bits());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat out(x.precision_bits());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat out(std::min(x.precision_bits(), y.precision_bits()));
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat out(std::min(x.precision_bits(), y.precision_bits()));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat out(x.precision_bits());
  mpfr_mul_2si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pi(unsigned precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

BigFloat epsilon(long bits, unsigned precision_bits) { return ldexp(BigFloat(1L, precision_bits), -bits); }

Complex operator/(const Complex& a, const Complex& b) {
  const BigFloat den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigFloat abs(const Complex& z) {
  BigFloat out(z.precision_bits());
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return out;
}

Complex exp(const Complex& z) {
  const BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) {
  const BigFloat r = abs(z);
  if (r.is_zero()) throw DomainError("log of zero");
  return {log(r), atan2(z.im, z.re)};
}

Complex pow(const Complex& z, const Complex& s) { return exp(s * log(z)); }

Complex pow(const Complex& z, long n) {
  const unsigned bits = z.precision_bits();
  Complex result{BigFloat(1L, bits), BigFloat(0L, bits)};
  Complex base = z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  if (n < 0) result = Complex{BigFloat(1L, bits), BigFloat(0L, bits)} / result;
  return result;
}

}  // namespace kforge
