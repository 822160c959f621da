#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kforge/bigfloat.hpp"
#include "kforge/numeric.hpp"
#include "kforge/operator.hpp"
#include "kforge/seq.hpp"

namespace kforge {

struct PipelineConfig {
  std::size_t K = 2000;
  unsigned depth = 12;
  unsigned precision_bits = kDefaultPrecisionBits;
  bool half_power = false;
  Arithmetic arithmetic = Arithmetic::Exact;
  std::optional<Complex> c_override;
};

/// The two pairing constants Q0 and Qc; they are not derivable from L.
struct PairingInput {
  Rational Q0;
  Rational Qc;
};

struct KappaReport {
  Complex c;
  /// c is not a positive real, so log c is taken on the principal branch.
  bool principal_branch = false;
  bool dagger = false;
  ComplexSeries kappa;
  std::vector<BigFloat> errors;
  /// Extrapolation of a_k^(l) / a_k for l = 0..M.
  std::vector<ExtrapolationDiagnostics> limits;
};

/// kappa_0..kappa_M. With dagger set the recurrences run on the adjoint.
KappaReport kappa_coeffs(const Operator& L, std::size_t M, const PipelineConfig& cfg, bool dagger = false);

struct AlphaReport {
  KappaReport kappa;
  ComplexSeries alpha;
  std::vector<BigFloat> errors;
};

/// alpha_0..alpha_M, the series inverse of kappa.
AlphaReport alpha_coeffs(const Operator& L, std::size_t M, const PipelineConfig& cfg, bool dagger = false);

struct LMHSColumnReport {
  std::vector<BigFloat> column;
  /// Lower triangular: matrix[i][j] = alpha_(i-j) for i >= j.
  std::vector<std::vector<BigFloat>> matrix;
};

LMHSColumnReport lmhs_column(const std::vector<BigFloat>& alpha, unsigned n);
LMHSColumnReport lmhs_column(const Operator& L, const PipelineConfig& cfg);

struct KappaValue {
  Complex value;
  BigFloat error;
  ExtrapolationDiagnostics diagnostics;
};

/// kappa(s) = c^s lim A_k(s) / a_k at a rational s (not a negative integer);
/// c^s on the principal branch.
KappaValue kappa_at(const Operator& L, const Rational& s, const PipelineConfig& cfg);

struct AperyReport {
  Complex c;
  Complex value;
  BigFloat error;
  ExtrapolationDiagnostics direct;
  /// Second path through b_k / a_k, present when 1 <= ell <= d - 1.
  std::optional<BigFloat> b_path_value;
  std::optional<BigFloat> b_path_error;
  std::optional<ExtrapolationDiagnostics> b_path;
};

/// kappa(ell) = c^ell lim A_k(ell) / a_k, cross-checked against
/// ell^r lim b_k / a_k when 1 <= ell <= d - 1.
AperyReport apery_constant(const Operator& L, unsigned long ell, const PipelineConfig& cfg);

/// kappa(target) from the difference equation
///   sum_k Q_k(-s-k) / (s+k)^r kappa(s+k) = 0,  s = target - d,
/// with Q_k the P-form of the adjoint. The slot s + k = 0 uses the limit of
/// Q_k(-x) / x^r (which is (-1)^r for a MUM operator).
BigFloat kappa_extend(const Operator& L, const std::map<long, BigFloat>& known, long target);

/// Exact weights w_k with kappa(target) = sum_{k<d} w_k kappa(target - d + k).
std::vector<Rational> extension_coefficients(const Operator& L, long target);

struct HypergeomReport {
  FloatSeries kappa;
  FloatSeries kappa_inverse;
};

/// kappa^{-1}(s) = prod_j Gamma(s + a_j) / (Gamma(s + 1) Gamma(a_j)) mod s^(M+1).
HypergeomReport hypergeom_kappa(const std::vector<Rational>& params, std::size_t M, unsigned precision_bits);

/// Gamma_c(s) = kappa(s) (Qc/Q0) (1 - e^(2 pi i s))^r / ((2 pi i)^n s^r), r = n + 1.
Complex gamma_prefactor(const BigFloat& kappa_value, const BigFloat& s, const PairingInput& pairing, unsigned n);

/// Gamma_c at an integer: m = 0 gives (-1)^r (Qc/Q0) 2 pi i, m > 0 gives 0,
/// m < 0 gives Gamma_c(0) atilde_|m|.
Complex gamma_at_integer(const Operator& L, long m, const PairingInput& pairing, unsigned precision_bits);

/// Leading Laurent coefficient (-m)^r atilde_m of kappa at s = -m.
Rational kappa_negative_leading(const Operator& L, unsigned long m);

struct ResidualReport {
  BigFloat residual;
  BigFloat error;
  std::vector<Complex> kappa_values;  // kappa(s0 + k), k = 0..d
};

/// |sum_k Q_k(-s0-k) / (s0+k)^r kappa(s0+k)| with each kappa from the limit.
ResidualReport difference_residual(const Operator& L, const Rational& s0, const PipelineConfig& cfg);

struct GrowthReport {
  std::vector<std::size_t> indices;
  std::vector<BigFloat> values;  // a_m |c|^m m^((n+1)/2)
  BigFloat plateau;
  BigFloat plateau_error;
  /// |g_K / g_(K/2) - 1|
  BigFloat drift;
  bool decays_like_inverse_m = false;
};

GrowthReport growth_check(const Operator& L, const PipelineConfig& cfg);

struct VPhiTerm {
  unsigned log_power;
  BigFloat coefficient;
  BigFloat error;
};

/// Coefficients of log^k t, k = 0..n+1: alpha_{n+1-k} / (Q0 k!) using the
/// adjoint-side alpha.
std::vector<VPhiTerm> vphi_expansion(const Operator& L, const PairingInput& pairing, const PipelineConfig& cfg);

}  // namespace kforge
