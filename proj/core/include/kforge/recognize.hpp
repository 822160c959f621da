#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kforge/bigfloat.hpp"
#include "kforge/rational.hpp"

namespace kforge {

/// Named constants that can be re-evaluated at any precision. The first
/// element is always "one".
class ConstantBasis {
 public:
  /// Labels: one, pi, zeta2, zeta3, zeta4, log:c, log:<rational>,
  /// custom:<decimal>. "one" is prepended when missing; log:c needs c.
  static ConstantBasis from_labels(const std::vector<std::string>& labels,
                                   const std::optional<BigFloat>& c = std::nullopt);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::vector<BigFloat> values(unsigned precision_bits) const;

 private:
  std::vector<std::string> labels_;
  std::optional<BigFloat> c_;
};

/// Lattice reduction (exact rational Gram-Schmidt, delta = 3/4) on the
/// rows (e_i, round(2^(3 prec / 4) v_i)); returns the first reduced row with
/// coefficients bounded by max_coeff and |sum m_i v_i| < 2^(-prec/2).
std::optional<std::vector<Integer>> integer_relation(const std::vector<BigFloat>& values, const Integer& max_coeff,
                                                     unsigned prec);

/// LLL-reduces the rows of an integer matrix in place.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

struct Recognition {
  std::vector<Rational> coefficients;  // one per basis element
  std::vector<Integer> relation;       // (m_x, m_1, ..., m_n)
  BigFloat residual;                   // relation residual at 2 prec
  unsigned prec;
  std::string text;                    // "17/6 * zeta3"
};

/// x as a rational combination of the basis, each coefficient with
/// denominator at most max_den; reported only when the relation survives
/// re-evaluation of the basis at twice the precision. max_coeff = 0 picks a
/// bound from max_den, the basis size and prec.
std::optional<Recognition> recognize_value(const BigFloat& x, const ConstantBasis& basis, unsigned long max_den,
                                           unsigned prec, const Integer& max_coeff = 0);

/// Bits of x that a reported absolute error supports (clamped to [16, prec of x]).
unsigned supported_bits(const BigFloat& x, const BigFloat& error);

}  // namespace kforge
