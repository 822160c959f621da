#pragma once

#include <cstddef>
#include <vector>

#include "kforge/bigfloat.hpp"
#include "kforge/operator.hpp"
#include "kforge/sequence_types.hpp"

namespace kforge {

/// Exact rationals (default) or fixed-precision big floats for very long runs.
enum class Arithmetic { Exact, Float };

/// a_0..a_K of the holomorphic solution (a_0 = 1).
RationalSequence period_coeffs(const Operator& L, std::size_t K);

/// A_0(s)..A_K(s) mod s^(M+1) from the deformed recurrence.
std::vector<SeriesSRational> frobenius_series(const Operator& L, std::size_t K, std::size_t M);

/// A_0(s)..A_K(s) at a rational point s (s not a negative integer).
RationalSequence frobenius_values(const Operator& L, std::size_t K, const Rational& s);

/// Coefficients of A(t) / p(t) through t^K.
RationalSequence atilde_coeffs(const RationalSequence& a, const PolyT& p, std::size_t K);

/// b_k = 0 for k < ell, A_{k-ell}(ell) / ell^r for k >= ell.
RationalSequence b_sequence(const Operator& L, std::size_t K, unsigned long ell);

/// Coefficients of A_k(s0 + sigma) mod sigma^(M+1) sampled at the given
/// (increasing) indices, rounded to precision_bits. Only the last d terms of
/// the recurrence are kept in memory.
std::vector<std::vector<BigFloat>> sample_expansion(const Operator& L, const Rational& s0, std::size_t M,
                                                    const std::vector<std::size_t>& indices,
                                                    unsigned precision_bits,
                                                    Arithmetic mode = Arithmetic::Exact);

}  // namespace kforge
