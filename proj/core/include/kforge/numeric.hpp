#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kforge/bigfloat.hpp"
#include "kforge/error.hpp"
#include "kforge/rational.hpp"

namespace kforge {

// ---- special functions -------------------------------------------------

/// Bernoulli number B_n (B_1 = -1/2), exact.
Rational bernoulli(unsigned n);

/// log Gamma(x) for x > 0.
BigFloat lngamma(const BigFloat& x, unsigned precision_bits);

/// Taylor coefficients c_0..c_M of log Gamma(x + s) about s = 0, x > 0.
/// c_0 = log Gamma(x), c_1 = digamma(x), c_i = (-1)^i zeta(i, x) / i.
std::vector<BigFloat> lngamma_series(const BigFloat& x, std::size_t M, unsigned precision_bits);

/// Hurwitz zeta(n, x) for n >= 2, x > 0.
BigFloat hurwitz_zeta(unsigned n, const BigFloat& x, unsigned precision_bits);
BigFloat zeta(unsigned n, unsigned precision_bits);
BigFloat log_rational(const Rational& q, unsigned precision_bits);

/// "pi", "zeta(n)" (or "zetaN"), "log(q)".
BigFloat reference_constant(const std::string& name, unsigned precision_bits);

// ---- truncated power series in s ---------------------------------------

template <class T>
struct Series {
  std::vector<T> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  const T& operator[](std::size_t i) const { return coeffs[i]; }
  T& operator[](std::size_t i) { return coeffs[i]; }
};

using FloatSeries = Series<BigFloat>;
using ComplexSeries = Series<Complex>;

FloatSeries series_multiply(const FloatSeries& a, const FloatSeries& b);
ComplexSeries series_multiply(const ComplexSeries& a, const ComplexSeries& b);
/// g with f g = 1 mod s^(M+1).
FloatSeries series_invert(const FloatSeries& f);
ComplexSeries series_invert(const ComplexSeries& f);
/// exp(f) for f with f[0] = 0 (a nonzero f[0] is folded in as exp(f[0])).
FloatSeries series_exp(const FloatSeries& f);

// ---- extrapolation -----------------------------------------------------

struct ExtrapolationDiagnostics {
  unsigned depth = 0;
  BigFloat spread;
  std::vector<std::size_t> nodes;
  bool precision_warning = false;
};

struct LimitEstimate {
  BigFloat value;
  ExtrapolationDiagnostics diagnostics;
};

/// Sample indices K = k_0 > floor(0.9 k_0) > ... (count of them, strictly
/// decreasing, all >= 1), returned in increasing order.
std::vector<std::size_t> thinned_nodes(std::size_t K, std::size_t count);

/// Neville extrapolation to h = 0 in h = 1/k (or 1/sqrt(k) when
/// half_power) over the last depth+1 samples.
LimitEstimate extrapolate_limit(const std::vector<BigFloat>& x, const std::vector<std::size_t>& k,
                                unsigned depth, bool half_power = false);

// ---- roots and linear maps ---------------------------------------------

/// Root of q of strictly smallest modulus, refined to precision_bits.
Complex smallest_root(const PolyT& q, unsigned precision_bits);

/// exp(lambda N) applied to the column: out_j = sum_{i<=j} lambda^(j-i)/(j-i)! col_i.
std::vector<BigFloat> nilpotent_rescale(const std::vector<BigFloat>& column, const BigFloat& lambda);

}  // namespace kforge
