#include "kforge/recognize.hpp"

#include <algorithm>
#include <cmath>

#include "kforge/error.hpp"
#include "kforge/numeric.hpp"

namespace kforge {

ConstantBasis ConstantBasis::from_labels(const std::vector<std::string>& labels, const std::optional<BigFloat>& c) {
  ConstantBasis b;
  b.c_ = c;
  b.labels_.push_back("one");
  for (const auto& l : labels) {
    if (l == "one") continue;
    if (std::find(b.labels_.begin(), b.labels_.end(), l) != b.labels_.end())
      throw DomainError("basis label '" + l + "' repeated");
    if (l == "log:c" && !c) throw DomainError("basis label log:c needs the conifold point");
    b.labels_.push_back(l);
  }
  b.values(64);  // validates every label
  return b;
}

std::vector<BigFloat> ConstantBasis::values(unsigned precision_bits) const {
  std::vector<BigFloat> out;
  for (const auto& l : labels_) {
    if (l == "one") {
      out.emplace_back(1L, precision_bits);
    } else if (l == "pi") {
      out.push_back(pi(precision_bits));
    } else if (l.rfind("zeta", 0) == 0) {
      out.push_back(reference_constant(l, precision_bits));
    } else if (l == "log:c") {
      out.push_back(log(c_->with_precision(precision_bits)));
    } else if (l.rfind("log:", 0) == 0) {
      out.push_back(log_rational(parse_rational(l.substr(4)), precision_bits));
    } else if (l.rfind("custom:", 0) == 0) {
      out.push_back(BigFloat::from_decimal(l.substr(7), precision_bits));
    } else {
      throw DomainError("unknown basis label '" + l + "'");
    }
  }
  return out;
}

namespace {

Integer round_nearest(const Rational& q) {
  Integer out;
  const Rational shifted = q + Rational(1, 2);
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void gram_schmidt(const std::vector<std::vector<Integer>>& b, std::vector<std::vector<Rational>>& mu,
                  std::vector<Rational>& B) {
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> star(n);
  mu.assign(n, std::vector<Rational>(n, Rational(0)));
  B.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    star[i].assign(b[i].begin(), b[i].end());
    std::vector<Rational> bi(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = B[j] == 0 ? Rational(0) : dot(bi, star[j]) / B[j];
      for (std::size_t t = 0; t < star[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
    }
    B[i] = dot(star[i], star[i]);
  }
}

// 10 max_den^n, kept 16x below the size 2^(3 prec / (4 (n + 1))) at which
// reduced vectors of the (n+1)-row lattice show up without any true relation.
Integer default_max_coeff(std::size_t n, unsigned long max_den, unsigned prec) {
  Integer want = 10;
  for (std::size_t i = 0; i < n; ++i) want *= max_den;
  const long noise_bits = static_cast<long>(3 * prec / (4 * (n + 1))) - 4;
  Integer noise = 1;
  if (noise_bits > 0) noise <<= static_cast<mp_bitcnt_t>(noise_bits);
  return std::max(Integer(1000), std::min(want, noise));
}

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  const Rational delta(3, 4);
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> B;
  gram_schmidt(b, mu, B);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const Integer q = round_nearest(mu[k][j]);
      if (q == 0) continue;
      for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
      for (std::size_t i = 0; i < j; ++i) mu[k][i] -= Rational(q) * mu[j][i];
      mu[k][j] -= Rational(q);
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt(b, mu, B);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

std::optional<std::vector<Integer>> integer_relation(const std::vector<BigFloat>& values, const Integer& max_coeff,
                                                     unsigned prec) {
  const std::size_t n = values.size();
  if (n < 2) throw DomainError("integer_relation needs at least two values");
  for (const auto& v : values)
    if (v.precision_bits() < prec)
      throw PrecisionError("value carries " + std::to_string(v.precision_bits()) + " bits, fewer than " +
                           std::to_string(prec));
  const unsigned w = prec + 16;
  const long scale_bits = static_cast<long>((3 * prec + 3) / 4);
  std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n + 1, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    basis[i][n] = round_nearest(ldexp(values[i].with_precision(w), scale_bits).to_rational());
  }
  lll_reduce(basis);
  const BigFloat bound = epsilon(prec / 2, w);
  for (const auto& row : basis) {
    std::vector<Integer> m(row.begin(), row.begin() + static_cast<long>(n));
    if (std::all_of(m.begin(), m.end(), [](const Integer& x) { return x == 0; })) continue;
    if (std::any_of(m.begin(), m.end(), [&](const Integer& x) { return abs(x) > max_coeff; })) continue;
    BigFloat sum(0L, w);
    for (std::size_t i = 0; i < n; ++i) sum += values[i].with_precision(w) * BigFloat(Rational(m[i]), w);
    if (abs(sum) < bound) return m;
  }
  return std::nullopt;
}

std::optional<Recognition> recognize_value(const BigFloat& x, const ConstantBasis& basis, unsigned long max_den,
                                           unsigned prec, const Integer& max_coeff_in) {
  if (x.precision_bits() < prec)
    throw PrecisionError("value carries " + std::to_string(x.precision_bits()) + " bits, fewer than " +
                         std::to_string(prec));
  const Integer max_coeff = max_coeff_in > 0 ? max_coeff_in : default_max_coeff(basis.size(), max_den, prec);
  std::vector<BigFloat> vals{x.with_precision(prec)};
  for (auto& v : basis.values(prec)) vals.push_back(v);
  auto rel = integer_relation(vals, max_coeff, prec);
  if (!rel || (*rel)[0] == 0) return std::nullopt;
  auto& m = *rel;
  Integer g = 0;
  for (const auto& v : m) g = gcd(g, v);
  for (auto& v : m) v /= g;
  if (m[0] < 0)
    for (auto& v : m) v = -v;

  // Mandatory re-check with the basis evaluated at twice the precision.
  const unsigned w2 = 2 * prec;
  const std::vector<BigFloat> hi = basis.values(w2);
  BigFloat sum = x.with_precision(std::max(w2, x.precision_bits())) * BigFloat(Rational(m[0]), w2);
  for (std::size_t i = 0; i < hi.size(); ++i) sum += hi[i] * BigFloat(Rational(m[i + 1]), w2);
  const BigFloat residual = abs(sum);
  if (!(residual < epsilon(prec / 2, w2))) return std::nullopt;

  Recognition out;
  out.relation = m;
  out.residual = residual;
  out.prec = prec;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    out.coefficients.push_back(Rational(-m[i + 1], m[0]));
    out.coefficients.back().canonicalize();
    const Rational& q = out.coefficients.back();
    if (q.get_den() > max_den) return std::nullopt;
    if (q == 0) continue;
    const bool neg = q < 0;
    if (out.text.empty()) {
      if (neg) out.text += "-";
    } else {
      out.text += neg ? " - " : " + ";
    }
    out.text += to_string(neg ? Rational(-q) : q);
    if (basis.labels()[i] != "one") out.text += " * " + basis.labels()[i];
  }
  if (out.text.empty()) out.text = "0";
  return out;
}

unsigned supported_bits(const BigFloat& x, const BigFloat& error) {
  const unsigned cap = x.precision_bits();
  if (error.is_zero()) return cap;
  const long e = error.exponent();  // error < 2^e
  const long bits = -e - 2;
  return static_cast<unsigned>(std::clamp<long>(bits, 16, static_cast<long>(cap)));
}

}  // namespace kforge
