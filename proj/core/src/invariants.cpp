#include "kforge/invariants.hpp"

#include <algorithm>
#include <set>

#include "kforge/error.hpp"

namespace kforge {

namespace {

unsigned working(const PipelineConfig& cfg) { return cfg.precision_bits + 32; }

void check_config(const PipelineConfig& cfg) {
  if (cfg.precision_bits < 64) throw DomainError("precision_bits must be >= 64");
  if (cfg.depth == 0) throw DomainError("extrapolation depth must be >= 1");
  const std::vector<std::size_t> nodes = thinned_nodes(cfg.K, cfg.depth + 1);
  if (nodes.size() < cfg.depth + 1)
    throw InsufficientDataError("K = " + std::to_string(cfg.K) + " is too small for depth " +
                                std::to_string(cfg.depth));
}

bool positive_real(const Complex& z) { return z.im.is_zero() && z.re.sign() > 0; }

Complex complex_pow(const Complex& c, const Rational& s, unsigned w) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return pow(c, s.get_num().get_si());
  if (positive_real(c)) return Complex(pow(c.re, BigFloat(s, w)));
  return pow(c, Complex(BigFloat(s, w)));
}

// lim_k num_k / den_k over the given nodes.
LimitEstimate ratio_limit(const std::vector<BigFloat>& num, const std::vector<BigFloat>& den,
                          const std::vector<std::size_t>& nodes, const PipelineConfig& cfg) {
  std::vector<BigFloat> ratio;
  for (std::size_t i = 0; i < num.size(); ++i) ratio.push_back(num[i] / den[i]);
  return extrapolate_limit(ratio, nodes, cfg.depth, cfg.half_power);
}

std::vector<BigFloat> column(const std::vector<std::vector<BigFloat>>& rows, std::size_t j) {
  std::vector<BigFloat> out;
  for (const auto& r : rows) out.push_back(r[j]);
  return out;
}

// Samples of A_k(s) (column 0 of the expansion at s) at the requested indices.
std::vector<BigFloat> values_at(const Operator& V, const Rational& s, const std::vector<std::size_t>& idx,
                                const PipelineConfig& cfg) {
  return column(sample_expansion(V, s, 0, idx, working(cfg), cfg.arithmetic), 0);
}

Operator dagger_of(const Operator& V) { return validate_mum(adjoint(V)); }

}  // namespace

KappaReport kappa_coeffs(const Operator& L, std::size_t M, const PipelineConfig& cfg, bool dagger) {
  check_config(cfg);
  const unsigned w = working(cfg);
  const Operator V = dagger ? dagger_of(validate_mum(L)) : validate_mum(L);
  KappaReport rep;
  rep.dagger = dagger;
  rep.c = conifold_point(V, w, cfg.c_override);
  rep.principal_branch = !positive_real(rep.c);
  const Complex logc = rep.principal_branch ? log(rep.c) : Complex(log(rep.c.re));

  const std::vector<std::size_t> nodes = thinned_nodes(cfg.K, cfg.depth + 1);
  const auto samples = sample_expansion(V, Rational(0), M, nodes, w, cfg.arithmetic);
  const std::vector<BigFloat> a = column(samples, 0);
  std::vector<BigFloat> lim;
  for (std::size_t l = 0; l <= M; ++l) {
    LimitEstimate e = ratio_limit(column(samples, l), a, nodes, cfg);
    lim.push_back(e.value);
    rep.limits.push_back(e.diagnostics);
  }
  // kappa_m = sum_j log^j c / j! lim_(m-j)
  std::vector<Complex> logpow{Complex(BigFloat(1L, w))};
  for (std::size_t j = 1; j <= M; ++j) logpow.push_back(logpow.back() * logc / BigFloat(static_cast<long>(j), w));
  for (std::size_t m = 0; m <= M; ++m) {
    Complex acc(BigFloat(0L, w));
    BigFloat err(0L, w);
    for (std::size_t j = 0; j <= m; ++j) {
      acc += logpow[j] * lim[m - j];
      err += abs(logpow[j]) * rep.limits[m - j].spread;
    }
    rep.kappa.coeffs.push_back({acc.re.with_precision(cfg.precision_bits), acc.im.with_precision(cfg.precision_bits)});
    rep.errors.push_back(err.with_precision(cfg.precision_bits));
  }
  return rep;
}

AlphaReport alpha_coeffs(const Operator& L, std::size_t M, const PipelineConfig& cfg, bool dagger) {
  AlphaReport rep;
  rep.kappa = kappa_coeffs(L, M, cfg, dagger);
  rep.alpha = series_invert(rep.kappa.kappa);
  // First order: delta alpha = -alpha^2 delta kappa.
  const ComplexSeries a2 = series_multiply(rep.alpha, rep.alpha);
  for (std::size_t i = 0; i <= M; ++i) {
    BigFloat err(0L, cfg.precision_bits);
    for (std::size_t j = 0; j <= i; ++j) err += abs(a2[i - j]) * rep.kappa.errors[j];
    rep.errors.push_back(err);
  }
  return rep;
}

LMHSColumnReport lmhs_column(const std::vector<BigFloat>& alpha, unsigned n) {
  if (alpha.size() < n + 1) throw InsufficientDataError("need alpha_0..alpha_n");
  LMHSColumnReport rep;
  rep.column.assign(alpha.begin(), alpha.begin() + n + 1);
  const unsigned prec = alpha.front().precision_bits();
  rep.matrix.assign(n + 1, std::vector<BigFloat>(n + 1, BigFloat(0L, prec)));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= i; ++j) rep.matrix[i][j] = alpha[i - j];
  return rep;
}

LMHSColumnReport lmhs_column(const Operator& L, const PipelineConfig& cfg) {
  const unsigned n = validate_mum(L).order() - 1;
  const AlphaReport a = alpha_coeffs(L, n, cfg);
  std::vector<BigFloat> re;
  for (const auto& z : a.alpha.coeffs) re.push_back(z.re);
  return lmhs_column(re, n);
}

KappaValue kappa_at(const Operator& L, const Rational& s, const PipelineConfig& cfg) {
  check_config(cfg);
  const unsigned w = working(cfg);
  const Operator V = validate_mum(L);
  const Complex c = conifold_point(V, w, cfg.c_override);
  const std::vector<std::size_t> nodes = thinned_nodes(cfg.K, cfg.depth + 1);
  const LimitEstimate lim =
      ratio_limit(values_at(V, s, nodes, cfg), values_at(V, Rational(0), nodes, cfg), nodes, cfg);
  const Complex cs = complex_pow(c, s, w);
  const Complex v = cs * lim.value;
  return {{v.re.with_precision(cfg.precision_bits), v.im.with_precision(cfg.precision_bits)},
          (abs(cs) * lim.diagnostics.spread).with_precision(cfg.precision_bits),
          lim.diagnostics};
}

AperyReport apery_constant(const Operator& L, unsigned long ell, const PipelineConfig& cfg) {
  if (ell == 0) throw DomainError("Apery constants are defined for ell >= 1");
  check_config(cfg);
  const unsigned w = working(cfg);
  const Operator V = validate_mum(L);
  AperyReport rep;
  rep.c = conifold_point(V, w, cfg.c_override);

  const Rational s(static_cast<long>(ell));
  const std::vector<std::size_t> nodes = thinned_nodes(cfg.K, cfg.depth + 1);
  const bool two_paths = ell + 1 <= V.degree();
  std::set<std::size_t> a_idx(nodes.begin(), nodes.end());
  if (two_paths)
    for (std::size_t k : nodes)
      if (k < ell) throw InsufficientDataError("K too small for the b-sequence path");
  std::vector<std::size_t> A_idx(a_idx.begin(), a_idx.end());
  if (two_paths) {
    std::set<std::size_t> merged(a_idx);
    for (std::size_t k : nodes) merged.insert(k - ell);
    A_idx.assign(merged.begin(), merged.end());
  }
  const std::vector<BigFloat> a = values_at(V, Rational(0), nodes, cfg);
  const std::vector<BigFloat> A_all = values_at(V, s, A_idx, cfg);
  auto A_at = [&](std::size_t k) {
    return A_all[static_cast<std::size_t>(std::lower_bound(A_idx.begin(), A_idx.end(), k) - A_idx.begin())];
  };

  std::vector<BigFloat> A;
  for (std::size_t k : nodes) A.push_back(A_at(k));
  const LimitEstimate direct = ratio_limit(A, a, nodes, cfg);
  const Complex cl = pow(rep.c, static_cast<long>(ell));
  const Complex v = cl * direct.value;
  rep.value = {v.re.with_precision(cfg.precision_bits), v.im.with_precision(cfg.precision_bits)};
  rep.error = (abs(cl) * direct.diagnostics.spread).with_precision(cfg.precision_bits);
  rep.direct = direct.diagnostics;

  if (two_paths) {
    std::vector<BigFloat> b;
    for (std::size_t k : nodes) b.push_back(A_at(k - ell));
    const LimitEstimate bl = ratio_limit(b, a, nodes, cfg);
    // b_k = A_{k-ell}(ell) / ell^r, so kappa(ell) = ell^r lim b_k / a_k = lim A_{k-ell}(ell) / a_k.
    rep.b_path_value = bl.value.with_precision(cfg.precision_bits);
    rep.b_path_error = bl.diagnostics.spread.with_precision(cfg.precision_bits);
    rep.b_path = bl.diagnostics;
    const BigFloat gap = abs(Complex(v.re - bl.value, v.im));
    const BigFloat allowed = rep.error + *rep.b_path_error + epsilon(cfg.precision_bits / 2, w) * abs(v);
    if (gap > allowed)
      throw PathDisagreementError("kappa(" + std::to_string(ell) + ") paths differ by " +
                                  gap.with_precision(64).to_string(6) + " > combined error " +
                                  allowed.with_precision(64).to_string(6));
  }
  return rep;
}

std::vector<Rational> extension_coefficients(const Operator& L, long target) {
  const Operator V = validate_mum(L);
  const unsigned r = V.order();
  const long d = V.degree();
  if (d < 1) throw DomainError("operator has degree 0");
  if (target < d)
    throw SingularStepError("kappa(" + std::to_string(target) +
                            ") would need the s + k = 0 slot in the leading position");
  const std::vector<PolyD> Q = adjoint(V).p_form();
  const long s = target - d;
  // Q_k(-x) / x^r at x = s + k, with the limit at x = 0.
  auto weight = [&](long k) -> Rational {
    const PolyD q = static_cast<std::size_t>(k) < Q.size() ? Q[static_cast<std::size_t>(k)] : PolyD();
    const long x = s + k;
    if (x != 0) return q(Rational(-x)) / rational_pow(Rational(x), r);
    for (unsigned i = 0; i < r; ++i)
      if (q.coeff(i) != 0) throw SingularStepError("Q_" + std::to_string(k) + "(-x)/x^r has a pole at x = 0");
    return r % 2 == 0 ? q.coeff(r) : Rational(-q.coeff(r));
  };
  const Rational lead = weight(d);
  if (lead == 0) throw SingularStepError("Q_d(" + std::to_string(-target) + ") vanishes");
  std::vector<Rational> w;
  for (long k = 0; k < d; ++k) w.push_back(-weight(k) / lead);
  return w;
}

BigFloat kappa_extend(const Operator& L, const std::map<long, BigFloat>& known, long target) {
  const std::vector<Rational> w = extension_coefficients(L, target);
  const long d = static_cast<long>(w.size());
  const long s = target - d;
  unsigned prec = 0;
  for (long k = 0; k < d; ++k) {
    auto it = known.find(s + k);
    if (it == known.end()) throw InsufficientDataError("kappa(" + std::to_string(s + k) + ") is not known");
    prec = prec == 0 ? it->second.precision_bits() : std::min(prec, it->second.precision_bits());
  }
  BigFloat acc(0L, prec);
  for (long k = 0; k < d; ++k) acc += BigFloat(w[static_cast<std::size_t>(k)], prec) * known.at(s + k);
  return acc;
}

HypergeomReport hypergeom_kappa(const std::vector<Rational>& params, std::size_t M, unsigned precision_bits) {
  if (params.empty()) throw DomainError("hypergeom_kappa needs at least one parameter");
  const unsigned w = precision_bits + 32;
  FloatSeries logk;
  logk.coeffs.assign(M + 1, BigFloat(0L, w));
  const std::vector<BigFloat> one = lngamma_series(BigFloat(1L, w), M, w);
  for (const auto& a : params) {
    if (a <= 0) throw DomainError("hypergeometric parameters must be positive");
    const std::vector<BigFloat> g = lngamma_series(BigFloat(a, w), M, w);
    for (std::size_t i = 1; i <= M; ++i) logk[i] += g[i] - one[i];
  }
  HypergeomReport rep;
  const FloatSeries inv = series_exp(logk);
  rep.kappa_inverse.coeffs.clear();
  for (const auto& x : inv.coeffs) rep.kappa_inverse.coeffs.push_back(x.with_precision(precision_bits));
  for (const auto& x : series_invert(inv).coeffs) rep.kappa.coeffs.push_back(x.with_precision(precision_bits));
  return rep;
}

Complex gamma_prefactor(const BigFloat& kappa_value, const BigFloat& s, const PairingInput& pairing, unsigned n) {
  if (pairing.Q0 == 0 || pairing.Qc == 0) throw DomainError("pairing constants must be nonzero");
  if (s.is_integer())
    throw IntegerArgumentError("Gamma_c at an integer is a limit; use gamma_at_integer");
  const unsigned w = std::min(kappa_value.precision_bits(), s.precision_bits()) + 32;
  const unsigned r = n + 1;
  const BigFloat two_pi = pi(w) * 2L;
  const Complex e(cos(two_pi * s), sin(two_pi * s));
  const Complex one(BigFloat(1L, w));
  const Complex factor = pow(one - e, static_cast<long>(r));
  // (2 pi i)^n s^r
  const Complex i_unit(BigFloat(0L, w), BigFloat(1L, w));
  const Complex denom = pow(i_unit * two_pi, static_cast<long>(n)) * pow(s.with_precision(w), static_cast<long>(r));
  const Complex out = factor * (kappa_value.with_precision(w) * BigFloat(pairing.Qc / pairing.Q0, w)) / denom;
  const unsigned p = w - 32;
  return {out.re.with_precision(p), out.im.with_precision(p)};
}

Complex gamma_at_integer(const Operator& L, long m, const PairingInput& pairing, unsigned precision_bits) {
  if (pairing.Q0 == 0 || pairing.Qc == 0) throw DomainError("pairing constants must be nonzero");
  const Operator V = validate_mum(L);
  const unsigned r = V.order();
  const BigFloat zero(0L, precision_bits);
  if (m > 0) return Complex(zero, zero);
  const Rational ratio = (r % 2 == 0 ? Rational(1) : Rational(-1)) * pairing.Qc / pairing.Q0;
  Complex g0(zero, pi(precision_bits) * 2L * BigFloat(ratio, precision_bits));
  if (m == 0) return g0;
  const unsigned long mm = static_cast<unsigned long>(-m);
  const RationalSequence at = atilde_coeffs(period_coeffs(V, mm), solve_p(V), mm);
  return g0 * BigFloat(at.terms[mm], precision_bits);
}

Rational kappa_negative_leading(const Operator& L, unsigned long m) {
  if (m == 0) throw DomainError("m must be positive");
  const Operator V = validate_mum(L);
  const RationalSequence at = atilde_coeffs(period_coeffs(V, m), solve_p(V), m);
  return rational_pow(Rational(-static_cast<long>(m)), V.order()) * at.terms[m];
}

ResidualReport difference_residual(const Operator& L, const Rational& s0, const PipelineConfig& cfg) {
  check_config(cfg);
  const unsigned w = working(cfg);
  const Operator V = validate_mum(L);
  const unsigned r = V.order();
  const long d = V.degree();
  for (long k = 0; k <= d; ++k) {
    const Rational x = s0 + k;
    if (x <= 0 && x.get_den() == 1)
      throw DomainError("s0 + " + std::to_string(k) + " is a non-positive integer");
  }
  const Complex c = conifold_point(V, w, cfg.c_override);
  const std::vector<PolyD> Q = adjoint(V).p_form();
  const std::vector<std::size_t> nodes = thinned_nodes(cfg.K, cfg.depth + 1);
  const std::vector<BigFloat> a = values_at(V, Rational(0), nodes, cfg);

  ResidualReport rep;
  Complex sum(BigFloat(0L, w));
  BigFloat err(0L, w);
  for (long k = 0; k <= d; ++k) {
    const Rational x = s0 + k;
    const LimitEstimate lim = ratio_limit(values_at(V, x, nodes, cfg), a, nodes, cfg);
    const Complex cx = complex_pow(c, x, w);
    const Complex kappa = cx * lim.value;
    rep.kappa_values.push_back(kappa);
    const PolyD q = static_cast<std::size_t>(k) < Q.size() ? Q[static_cast<std::size_t>(k)] : PolyD();
    const Rational coef = q(-x) / rational_pow(x, r);
    const BigFloat cf(coef, w);
    sum += kappa * cf;
    err += abs(cf) * abs(cx) * lim.diagnostics.spread;
  }
  rep.residual = abs(sum).with_precision(cfg.precision_bits);
  rep.error = err.with_precision(cfg.precision_bits);
  return rep;
}

GrowthReport growth_check(const Operator& L, const PipelineConfig& cfg) {
  check_config(cfg);
  const unsigned w = working(cfg);
  const Operator V = validate_mum(L);
  const Complex c = conifold_point(V, w, cfg.c_override);
  const BigFloat modc = abs(c);
  const BigFloat expo(make_rational(static_cast<long>(V.order()), 2), w);

  const std::vector<std::size_t> nodes = thinned_nodes(cfg.K, cfg.depth + 1);
  std::set<std::size_t> all(nodes.begin(), nodes.end());
  const std::size_t K = cfg.K, K2 = cfg.K / 2, K4 = cfg.K / 4;
  if (K4 < 1) throw InsufficientDataError("K too small for growth_check");
  all.insert({K2, K4});
  const std::vector<std::size_t> idx(all.begin(), all.end());
  const std::vector<BigFloat> a = values_at(V, Rational(0), idx, cfg);
  auto g = [&](std::size_t i) {
    const BigFloat m(static_cast<long>(idx[i]), w);
    return a[i] * pow(modc, static_cast<long>(idx[i])) * pow(m, expo);
  };
  GrowthReport rep;
  std::vector<BigFloat> gn;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    rep.indices.push_back(idx[i]);
    rep.values.push_back(g(i).with_precision(cfg.precision_bits));
  }
  auto at = [&](std::size_t k) {
    return rep.values[static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), k) - idx.begin())];
  };
  for (std::size_t k : nodes) gn.push_back(at(k));
  const LimitEstimate plateau = extrapolate_limit(gn, nodes, cfg.depth, cfg.half_power);
  rep.plateau = plateau.value;
  rep.plateau_error = plateau.diagnostics.spread;
  rep.drift = abs(at(K) / at(K2) - 1L);
  const BigFloat d1 = abs(at(K) - at(K2));
  const BigFloat d2 = abs(at(K2) - at(K4));
  const BigFloat floor = epsilon(cfg.precision_bits / 2, cfg.precision_bits) * abs(at(K));
  if (d1 <= floor) {
    rep.decays_like_inverse_m = true;
  } else {
    const double ratio = (d1 / d2).to_double();
    rep.decays_like_inverse_m = ratio > 0.3 && ratio < 0.7;
  }
  return rep;
}

std::vector<VPhiTerm> vphi_expansion(const Operator& L, const PairingInput& pairing, const PipelineConfig& cfg) {
  if (pairing.Q0 == 0) throw DomainError("Q0 must be nonzero");
  const Operator V = validate_mum(L);
  const unsigned n = V.order() - 1;
  const AlphaReport a = alpha_coeffs(V, n + 1, cfg, true);
  const BigFloat q0(pairing.Q0, cfg.precision_bits);
  std::vector<VPhiTerm> out;
  BigFloat fact(1L, cfg.precision_bits);
  for (unsigned k = 0; k <= n + 1; ++k) {
    if (k > 0) fact = fact * static_cast<long>(k);
    const BigFloat scale = q0 * fact;
    out.push_back({k, a.alpha[n + 1 - k].re / scale, a.errors[n + 1 - k] / abs(scale)});
  }
  return out;
}

}  // namespace kforge
