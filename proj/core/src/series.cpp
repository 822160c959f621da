#include "kforge/numeric.hpp"

namespace kforge {

namespace {

BigFloat zero_like(const BigFloat& x) { return BigFloat(0L, x.precision_bits()); }
Complex zero_like(const Complex& z) { return Complex(BigFloat(0L, z.precision_bits())); }
bool is_zero(const BigFloat& x) { return x.is_zero(); }
bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }

template <class T>
Series<T> multiply_impl(const Series<T>& a, const Series<T>& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  Series<T> out;
  if (n == 0) return out;
  for (std::size_t i = 0; i < n; ++i) {
    T acc = zero_like(a[0]);
    for (std::size_t j = 0; j <= i; ++j) acc += a[j] * b[i - j];
    out.coeffs.push_back(acc);
  }
  return out;
}

template <class T>
Series<T> invert_impl(const Series<T>& f) {
  if (f.coeffs.empty() || is_zero(f[0])) throw ZeroConstantTermError("series has zero constant term");
  Series<T> g;
  const T one = f[0] / f[0];
  g.coeffs.push_back(one / f[0]);
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) {
    T acc = zero_like(f[0]);
    for (std::size_t j = 1; j <= i; ++j) acc += f[j] * g[i - j];
    g.coeffs.push_back(-(acc / f[0]));
  }
  return g;
}

}  // namespace

FloatSeries series_multiply(const FloatSeries& a, const FloatSeries& b) { return multiply_impl(a, b); }
ComplexSeries series_multiply(const ComplexSeries& a, const ComplexSeries& b) { return multiply_impl(a, b); }
FloatSeries series_invert(const FloatSeries& f) { return invert_impl(f); }
ComplexSeries series_invert(const ComplexSeries& f) { return invert_impl(f); }

FloatSeries series_exp(const FloatSeries& f) {
  FloatSeries g;
  if (f.coeffs.empty()) return g;
  // g' = f' g, so n g_n = sum_{k=1..n} k f_k g_{n-k}.
  g.coeffs.push_back(exp(f[0]));
  for (std::size_t n = 1; n < f.coeffs.size(); ++n) {
    BigFloat acc = zero_like(f[0]);
    for (std::size_t k = 1; k <= n; ++k) acc += f[k] * g[n - k] * static_cast<long>(k);
    g.coeffs.push_back(acc / static_cast<long>(n));
  }
  return g;
}

std::vector<BigFloat> nilpotent_rescale(const std::vector<BigFloat>& column, const BigFloat& lambda) {
  std::vector<BigFloat> out;
  for (std::size_t j = 0; j < column.size(); ++j) {
    BigFloat acc = zero_like(column[j]);
    BigFloat weight(1L, lambda.precision_bits());  // lambda^(j-i)/(j-i)!
    for (std::size_t i = j + 1; i-- > 0;) {
      acc += weight * column[i];
      weight = weight * lambda / static_cast<long>(j - i + 1);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace kforge
