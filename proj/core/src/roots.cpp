#include <algorithm>
#include <cmath>
#include <complex>

#include "kforge/numeric.hpp"

namespace kforge {

namespace {

using cd = std::complex<double>;

std::vector<cd> durand_kerner(const std::vector<double>& monic) {
  const std::size_t n = monic.size() - 1;
  double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
  radius = 1 + radius;
  std::vector<cd> z(n);
  const cd seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<double>(i)) * (radius / 2);
  auto eval = [&](cd x) {
    cd acc = 1;
    for (std::size_t i = n; i-- > 0;) acc = acc * x + monic[i];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cd denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      const cd step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (change < 1e-15) break;
  }
  return z;
}

Complex newton(const PolyT& q, Complex z, unsigned w) {
  std::vector<BigFloat> c, dc;
  for (const auto& x : q.coeffs()) c.emplace_back(x, w);
  const PolyT dq = q.derivative();
  for (const auto& x : dq.coeffs()) dc.emplace_back(x, w);
  auto horner = [&](const std::vector<BigFloat>& a, const Complex& x) {
    Complex acc(BigFloat(0L, w));
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + Complex(a[i]);
    return acc;
  };
  const BigFloat tol = epsilon(static_cast<long>(w) - 8, w);
  for (int iter = 0; iter < 200; ++iter) {
    const Complex step = horner(c, z) / horner(dc, z);
    z = z - step;
    if (abs(step) <= tol * max(BigFloat(1L, w), abs(z))) break;
  }
  return z;
}

}  // namespace

Complex smallest_root(const PolyT& q, unsigned precision_bits) {
  if (q.degree() < 1) throw ConstantQ0Error("q0 is constant; there is no conifold point");
  if (q.coeff(0) == 0) throw DomainError("q0(0) = 0");
  const PolyT sf = squarefree_part(q);
  std::vector<double> monic;
  for (const auto& x : sf.coeffs()) monic.push_back(Rational(x / sf.leading()).get_d());

  const unsigned w = precision_bits + 32;
  std::vector<cd> approx;
  if (sf.degree() == 1) {
    approx.push_back(-monic[0]);
  } else {
    approx = durand_kerner(monic);
  }
  double min_mod = std::abs(approx.front());
  for (const auto& z : approx) min_mod = std::min(min_mod, std::abs(z));

  std::vector<Complex> refined;
  for (const auto& z : approx) {
    if (std::abs(z) > min_mod * (1 + 1e-3)) continue;
    const bool real = std::abs(z.imag()) <= 1e-12 * std::abs(z);
    Complex start(BigFloat(z.real(), w), BigFloat(real ? 0.0 : z.imag(), w));
    refined.push_back(newton(sf, start, w));
  }
  std::sort(refined.begin(), refined.end(), [](const Complex& a, const Complex& b) { return abs(a) < abs(b); });
  const BigFloat tie = epsilon(precision_bits / 2, w);
  for (std::size_t i = 1; i < refined.size(); ++i) {
    const bool distinct = abs(refined[i] - refined[0]) > tie;
    if (distinct && abs(abs(refined[i]) - abs(refined[0])) <= tie)
      throw TieError("two roots of q0 share the minimal modulus " + abs(refined[0]).with_precision(64).to_string(12));
  }
  const Complex& best = refined.front();
  return {best.re.with_precision(precision_bits), best.im.with_precision(precision_bits)};
}

}  // namespace kforge
