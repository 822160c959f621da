#include <algorithm>
#include <cmath>
#include <mutex>
#include <regex>

#include "kforge/numeric.hpp"

namespace kforge {

namespace {

unsigned working_bits(unsigned bits) { return bits + 32; }

// Shift so that Stirling and Euler-Maclaurin tails reach 2^-w well before
// the asymptotic series starts to diverge.
long shift_for(const BigFloat& x, unsigned w) {
  const double target = 0.25 * w + 10.0;
  const double xd = x.to_double();
  return xd >= target ? 0L : static_cast<long>(std::ceil(target - xd));
}

}  // namespace

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    const unsigned m = static_cast<unsigned>(cache.size());
    Rational sum = 0;
    Integer binom = 1;  // binom(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      sum += Rational(binom) * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    cache.push_back(-sum / Rational(m + 1));
  }
  return cache[n];
}

BigFloat lngamma(const BigFloat& x, unsigned precision_bits) {
  if (x.sign() <= 0) throw DomainError("lngamma needs x > 0");
  const unsigned w = working_bits(precision_bits);
  BigFloat y = x.with_precision(std::max(w, x.precision_bits())).with_precision(w);
  const long n = shift_for(y, w);
  BigFloat prod(1L, w);
  for (long k = 0; k < n; ++k) prod *= y + k;
  y = y + n;
  BigFloat sum = (y - BigFloat(make_rational(1, 2), w)) * log(y) - y + log(pi(w) * 2L) / 2L;
  const BigFloat tiny = epsilon(w, w);
  const BigFloat y2 = y * y;
  BigFloat ypow = y;  // y^(2j-1)
  for (unsigned j = 1; j < 4 * w; ++j) {
    const BigFloat term = BigFloat(bernoulli(2 * j), w) / (ypow * static_cast<long>(2 * j * (2 * j - 1)));
    sum += term;
    if (abs(term) < tiny * max(BigFloat(1L, w), abs(sum))) break;
    ypow *= y2;
  }
  if (n > 0) sum -= log(prod);
  return sum.with_precision(precision_bits);
}

BigFloat hurwitz_zeta(unsigned n, const BigFloat& x, unsigned precision_bits) {
  if (n < 2) throw DomainError("hurwitz_zeta needs n >= 2");
  if (x.sign() <= 0) throw DomainError("hurwitz_zeta needs x > 0");
  const unsigned w = working_bits(precision_bits);
  BigFloat y = x.with_precision(std::max(w, x.precision_bits())).with_precision(w);
  const long shift = shift_for(y, w);
  BigFloat sum(0L, w);
  for (long k = 0; k < shift; ++k) sum += pow(y + k, -static_cast<long>(n));
  y = y + shift;
  const BigFloat yn = pow(y, -static_cast<long>(n));
  sum += y * yn / static_cast<long>(n - 1) + yn / 2L;
  const BigFloat tiny = epsilon(w, w);
  const BigFloat inv_y2 = BigFloat(1L, w) / (y * y);
  BigFloat ypow = yn / y;  // y^(-n-2j+1)
  Rational rising = n;     // n (n+1) ... (n+2j-2)
  Integer fact = 2;        // (2j)!
  for (unsigned j = 1; j < 4 * w; ++j) {
    const BigFloat term = BigFloat(bernoulli(2 * j) * rising / Rational(fact), w) * ypow;
    sum += term;
    if (abs(term) < tiny * abs(sum)) break;
    rising *= Rational((n + 2 * j - 1) * (n + 2 * j));
    fact *= (2 * j + 1) * (2 * j + 2);
    ypow *= inv_y2;
  }
  return sum.with_precision(precision_bits);
}

std::vector<BigFloat> lngamma_series(const BigFloat& x, std::size_t M, unsigned precision_bits) {
  if (x.sign() <= 0) throw DomainError("lngamma_series needs x > 0");
  std::vector<BigFloat> out;
  out.push_back(lngamma(x, precision_bits));
  if (M == 0) return out;
  const unsigned w = working_bits(precision_bits);
  BigFloat y = x.with_precision(std::max(w, x.precision_bits())).with_precision(w);
  const long shift = shift_for(y, w);
  BigFloat psi(0L, w);
  for (long k = 0; k < shift; ++k) psi -= BigFloat(1L, w) / (y + k);
  y = y + shift;
  psi += log(y) - BigFloat(1L, w) / (y * 2L);
  const BigFloat tiny = epsilon(w, w);
  const BigFloat y2 = y * y;
  BigFloat ypow = y2;
  for (unsigned j = 1; j < 4 * w; ++j) {
    const BigFloat term = BigFloat(bernoulli(2 * j), w) / (ypow * static_cast<long>(2 * j));
    psi -= term;
    if (abs(term) < tiny * max(BigFloat(1L, w), abs(psi))) break;
    ypow *= y2;
  }
  out.push_back(psi.with_precision(precision_bits));
  for (std::size_t i = 2; i <= M; ++i) {
    BigFloat z = hurwitz_zeta(static_cast<unsigned>(i), x, precision_bits) / static_cast<long>(i);
    out.push_back(i % 2 == 0 ? z : -z);
  }
  return out;
}

BigFloat zeta(unsigned n, unsigned precision_bits) {
  return hurwitz_zeta(n, BigFloat(1L, precision_bits), precision_bits);
}

BigFloat log_rational(const Rational& q, unsigned precision_bits) {
  if (q <= 0) throw DomainError("log of a non-positive rational");
  const unsigned w = working_bits(precision_bits);
  return log(BigFloat(q, w)).with_precision(precision_bits);
}

BigFloat reference_constant(const std::string& name, unsigned precision_bits) {
  static const std::regex zeta_re(R"(zeta\(?(\d+)\)?)");
  static const std::regex log_re(R"(log\((-?\d+(?:/\d+)?)\))");
  std::smatch m;
  if (name == "pi") return pi(precision_bits);
  if (std::regex_match(name, m, zeta_re)) {
    const unsigned long n = std::stoul(m[1].str());
    if (n < 2) throw DomainError("zeta(n) needs n >= 2");
    return zeta(static_cast<unsigned>(n), precision_bits);
  }
  if (std::regex_match(name, m, log_re)) return log_rational(parse_rational(m[1].str()), precision_bits);
  throw DomainError("unknown reference constant '" + name + "'");
}

}  // namespace kforge
