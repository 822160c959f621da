#include <gtest/gtest.h>

#include <random>

#include "kforge/error.hpp"
#include "kforge/seq.hpp"
#include "oracle.hpp"

using namespace kforge;

namespace {

const Operator& apery() {
  static const Operator L = parse_operator("D^3 - t*(34*D^3+51*D^2+27*D+5) + t^2*(D+1)^3");
  return L;
}

const Operator& central() {
  static const Operator L = parse_operator("D - 4*t*(D+1/2)");
  return L;
}

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// value of a series in s at s = x
Rational eval(const SeriesSRational& s, const Rational& x) {
  Rational acc = 0;
  for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST(PeriodCoeffs, FirstTerms) {
  EXPECT_EQ(period_coeffs(apery(), 3).terms, ints({1, 5, 73, 1445}));
  EXPECT_EQ(period_coeffs(central(), 3).terms, ints({1, 2, 6, 20}));
  EXPECT_EQ(period_coeffs(apery(), 0).terms, ints({1}));
}

TEST(PeriodCoeffs, MatchBinomialSums) {
  const auto a = period_coeffs(apery(), 60);
  const auto b = period_coeffs(parse_operator("D^2 - t*(11*D^2+11*D+3) - t^2*(D+1)^2"), 60);
  const auto c = period_coeffs(central(), 60);
  for (unsigned long k = 0; k <= 60; ++k) {
    EXPECT_EQ(a.at(k), Rational(oracle::apery3(k)));
    EXPECT_EQ(b.at(k), Rational(oracle::apery2(k)));
    EXPECT_EQ(c.at(k), Rational(oracle::binom(2 * k, k)));
  }
}

TEST(PeriodCoeffs, RequiresMum) {
  EXPECT_THROW(period_coeffs(parse_operator("(D-1)*D + t*D"), 5), NotMUMError);
}

TEST(SeqProperty, PeriodRecurrenceBySubstitution) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator L = oracle::random_mum(rng, 1 + trial % 4, 1 + trial % 3, 7);
    const auto a = period_coeffs(L, 40);
    EXPECT_EQ(a.at(0), 1);
    for (std::size_t m = 1; m <= 40; ++m) EXPECT_EQ(oracle::apply_at(L, a.terms, m), 0) << L.to_string();
  }
}

TEST(SeqProperty, FrobeniusSeriesAtZeroIsPeriodSequence) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Operator L = oracle::random_mum(rng, 1 + trial % 4, 1 + trial % 3, 7);
    const auto A = frobenius_series(L, 30, 3);
    const auto a = period_coeffs(L, 30);
    ASSERT_EQ(A.size(), 31U);
    EXPECT_EQ(A[0].coeffs, ints({1, 0, 0, 0}));
    for (std::size_t k = 0; k <= 30; ++k) {
      EXPECT_EQ(A[k].coeffs[0], a.at(k));
      EXPECT_EQ(A[k].coeffs.size(), 4U);
    }
  }
}

TEST(SeqProperty, FrobeniusValuesSolveShiftedRecurrence) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 12; ++trial) {
    const Operator L = oracle::random_mum(rng, 1 + trial % 4, 1 + trial % 3, 7);
    for (const Rational ell : {Rational(1), Rational(2), Rational(1, 3), Rational(-5, 2)}) {
      const auto A = frobenius_values(L, 25, ell);
      EXPECT_EQ(A.at(0), 1);
      for (std::size_t m = 1; m <= 25; ++m)
        EXPECT_EQ(oracle::apply_at(L, A.terms, m, ell), 0) << L.to_string() << " s=" << ell;
    }
  }
}

TEST(SeqProperty, FrobeniusSeriesSpecializes) {
  // Truncated at order M, the series at s = x agrees with A_k(x) to O(x^(M+1)).
  const auto A = frobenius_series(apery(), 6, 20);
  const Rational x(1, 1000);
  const auto V = frobenius_values(apery(), 6, x);
  for (std::size_t k = 1; k <= 6; ++k) {
    const Rational diff = abs(eval(A[k], x) - V.at(k));
    EXPECT_LT(diff * rational_pow(Rational(10), 40), 1) << k;
  }
}

TEST(SeqProperty, BSequenceIsInhomogeneousSolution) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const Operator L = oracle::random_mum(rng, 1 + trial % 4, 1 + trial % 3, 7);
    for (unsigned long ell : {1UL, 2UL}) {
      const auto b = b_sequence(L, 30, ell);
      for (std::size_t m = 0; m <= 30; ++m)
        EXPECT_EQ(oracle::apply_at(L, b.terms, m), m == ell ? Rational(1) : Rational(0)) << L.to_string();
    }
  }
}

TEST(BSequence, AperyValues) {
  const auto b = b_sequence(apery(), 5, 1);
  EXPECT_EQ(b.at(0), 0);
  EXPECT_EQ(b.at(1), 1);
  EXPECT_EQ(b.at(2), Rational(117, 8));
}

TEST(Atilde, Examples) {
  const auto a = period_coeffs(apery(), 6);
  EXPECT_EQ(atilde_coeffs(a, PolyT::constant(1), 6), a);
  EXPECT_EQ(atilde_coeffs(RationalSequence{ints({1, 0, 0}), 0}, PolyT({1, 1}), 2).terms, ints({1, -1, 1}));
  const RationalSequence x{ints({1, 4, 2, 7}), 0};
  const auto at = atilde_coeffs(x, PolyT({1, 8}), 3);
  EXPECT_EQ(at.at(1), 4 - 8);
  // p * atilde = a
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(at.at(k) + 8 * at.at(k - 1), x.at(k));
}

TEST(Sample, FloatModeAgreesWithExact) {
  const std::vector<std::size_t> idx{100, 200, 300};
  const auto exact = sample_expansion(apery(), 0, 3, idx, 256, Arithmetic::Exact);
  const auto flt = sample_expansion(apery(), 0, 3, idx, 256, Arithmetic::Float);
  ASSERT_EQ(exact.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t l = 0; l <= 3; ++l) EXPECT_LT(oracle::rel_err(flt[i][l], exact[i][l]), 1e-60) << i << "," << l;
  EXPECT_LT(oracle::rel_err(exact[0][0], BigFloat(Rational(oracle::apery3(100)), 256)), 1e-75);
}

TEST(Sample, RejectsNegativeIntegerPoint) {
  EXPECT_THROW(sample_expansion(apery(), -2, 0, {10}, 128), DomainError);
}
