#pragma once

// Reference values computed without the library's numeric code: MPFR special
// functions, closed-form binomial sums and brute-force polynomial expansion.

#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "kforge/bigfloat.hpp"
#include "kforge/operator.hpp"
#include "kforge/rational.hpp"

namespace oracle {

using kforge::BigFloat;
using kforge::Integer;
using kforge::Operator;
using kforge::Rational;

inline BigFloat zeta(unsigned long n, unsigned bits) {
  BigFloat x(bits);
  mpfr_zeta_ui(x.get(), n, MPFR_RNDN);
  return x;
}

inline BigFloat pi(unsigned bits) {
  BigFloat x(bits);
  mpfr_const_pi(x.get(), MPFR_RNDN);
  return x;
}

inline BigFloat log(const Rational& q, unsigned bits) {
  BigFloat x(bits);
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return x;
}

inline BigFloat sqrt(const Rational& q, unsigned bits) {
  BigFloat x(bits);
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
  return x;
}

inline BigFloat lngamma(const Rational& q, unsigned bits) {
  BigFloat x(bits);
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_lngamma(x.get(), x.get(), MPFR_RNDN);
  return x;
}

inline double rel_err(const BigFloat& got, const BigFloat& want) {
  return (abs(got - want) / abs(want)).to_double();
}

inline double abs_err(const BigFloat& got, const BigFloat& want) { return abs(got - want).to_double(); }

inline Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// sum_j C(k,j)^2 C(k+j,j)^2
inline Integer apery3(unsigned long k) {
  Integer s = 0;
  for (unsigned long j = 0; j <= k; ++j) {
    const Integer b = binom(k, j) * binom(k + j, j);
    s += b * b;
  }
  return s;
}

// sum_j C(k,j)^2 C(k+j,j)
inline Integer apery2(unsigned long k) {
  Integer s = 0;
  for (unsigned long j = 0; j <= k; ++j) s += binom(k, j) * binom(k, j) * binom(k + j, j);
  return s;
}

// Laurent polynomials as plain exponent maps, multiplied without pruning.
using Laurent = std::map<std::vector<int>, Rational>;

inline Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::vector<Rational> constant_terms(const Laurent& phi, std::size_t K) {
  const std::size_t n = phi.begin()->first.size();
  Laurent power{{std::vector<int>(n, 0), Rational(1)}};
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= K; ++k) {
    auto it = power.find(std::vector<int>(n, 0));
    out.push_back(it == power.end() ? Rational(0) : it->second);
    power = multiply(power, phi);
  }
  return out;
}

// L applied to sum_k a_k t^(k+s): coefficient of t^(m+s) is
// sum_j sum_i coeff(j,i) (m-j+s)^i a_(m-j).
inline Rational apply_at(const Operator& L, const std::vector<Rational>& a, std::size_t m, const Rational& s = 0) {
  Rational acc = 0;
  for (std::size_t j = 0; j <= L.degree() && j <= m; ++j) {
    Rational x = Rational(static_cast<long>(m - j)) + s, pw = 1;
    for (std::size_t i = 0; i <= L.order(); ++i) {
      acc += L.coeff(j, i) * pw * a[m - j];
      pw *= x;
    }
  }
  return acc;
}

// Operators as sums of c t^j D^i, applied to t^n: t^j D^i t^n = n^i t^(n+j).
inline std::map<long, Rational> act_on_monomial(const Operator& L, long n) {
  std::map<long, Rational> out;
  for (std::size_t j = 0; j <= L.degree(); ++j) {
    Rational pw = 1;
    for (std::size_t i = 0; i <= L.order(); ++i) {
      out[n + static_cast<long>(j)] += L.coeff(j, i) * pw;
      pw *= n;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<long, Rational> act(const Operator& L, const std::map<long, Rational>& f) {
  std::map<long, Rational> out;
  for (const auto& [n, c] : f)
    for (const auto& [m, v] : act_on_monomial(L, n)) out[m] += c * v;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Taylor coefficients of Gamma(1+s)^2 / Gamma(1+2s) from
// log = sum_{k>=2} (-1)^k zeta(k) (2 - 2^k) / k s^k.
inline std::vector<BigFloat> gamma_ratio_series(std::size_t M, unsigned bits) {
  std::vector<BigFloat> g(M + 1, BigFloat(0L, bits));
  for (std::size_t k = 2; k <= M; ++k) {
    BigFloat two_k(1L, bits);
    for (std::size_t i = 0; i < k; ++i) two_k = two_k * 2L;
    BigFloat c = zeta(k, bits) * (BigFloat(2L, bits) - two_k) / BigFloat(static_cast<long>(k), bits);
    g[k] = k % 2 == 0 ? c : -c;
  }
  std::vector<BigFloat> e(M + 1, BigFloat(0L, bits));
  e[0] = BigFloat(1L, bits);
  for (std::size_t n = 1; n <= M; ++n) {
    BigFloat acc(0L, bits);
    for (std::size_t k = 1; k <= n; ++k) acc += BigFloat(static_cast<long>(k), bits) * g[k] * e[n - k];
    e[n] = acc / BigFloat(static_cast<long>(n), bits);
  }
  return e;
}

inline Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return kforge::make_rational(num(rng), den(rng));
}

inline Operator random_operator(std::mt19937_64& rng, unsigned max_r, unsigned max_d, long bound) {
  std::uniform_int_distribution<unsigned> rd(1, max_r), dd(0, max_d);
  const unsigned r = rd(rng), d = dd(rng);
  std::vector<kforge::PolyD> rows;
  for (unsigned j = 0; j <= d; ++j) {
    std::vector<Rational> c(r + 1);
    for (auto& x : c) x = random_rational(rng, bound);
    if (j == d && c[r] == 0) c[r] = 1;
    rows.emplace_back(std::move(c));
  }
  if (rows[0].is_zero()) rows[0] = kforge::PolyD::monomial(r);
  return Operator::from_p_form(rows);
}

// P_0 = D^r and P_j of degree <= r with small integer coefficients.
inline Operator random_mum(std::mt19937_64& rng, unsigned r, unsigned d, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<kforge::PolyD> rows{kforge::PolyD::monomial(r)};
  for (unsigned j = 1; j <= d; ++j) {
    std::vector<Rational> c(r + 1);
    for (auto& x : c) x = coeff(rng);
    if (j == d && c[r] == 0) c[r] = 1;
    rows.emplace_back(std::move(c));
  }
  return Operator::from_p_form(rows);
}

}  // namespace oracle
