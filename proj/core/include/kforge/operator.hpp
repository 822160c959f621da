#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kforge/bigfloat.hpp"
#include "kforge/rational.hpp"
#include "kforge/sequence_types.hpp"

namespace kforge {

/// An element of the Weyl-type algebra Q[t, D] with D = t d/dt, held in the
/// normal form with t to the left of D:
///
///   L = sum_j t^j P_j(D) = sum_i q_{r-i}(t) D^i.
///
/// The dense coefficient table is indexed [j][i] for the monomial t^j D^i, so
/// the P-form reads rows and the q-form reads columns of the same data.
class Operator {
 public:
  Operator() = default;

  static Operator constant(const Rational& value);
  static Operator t();
  static Operator D();
  /// L = sum_j t^j p_form[j](D).
  static Operator from_p_form(const std::vector<PolyD>& p_form);
  /// L = sum_i q[r - i](t) D^i with r = q.size() - 1.
  static Operator from_q_form(const std::vector<PolyT>& q);

  bool is_zero() const { return rows_.empty(); }
  /// r: largest power of D present.
  unsigned order() const;
  /// d: largest power of t present.
  unsigned degree() const;

  Rational coeff(std::size_t t_power, std::size_t d_power) const;
  /// P_j(D), zero for j > degree.
  PolyD P(std::size_t j) const;
  /// q_i(t): coefficient of D^(r-i).
  PolyT q(std::size_t i) const;
  std::vector<PolyD> p_form() const;
  std::vector<PolyT> q_form() const;

  /// Text in the operator language, P-form style: "D^3 - t*(34*D^3+...) + ...".
  std::string to_string() const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a);
  friend Operator operator*(const Rational& s, const Operator& a);
  /// Noncommutative product, normalized with D t^j = t^j (D + j).
  friend Operator operator*(const Operator& a, const Operator& b);
  friend bool operator==(const Operator& a, const Operator& b) { return a.rows_ == b.rows_; }

 private:
  explicit Operator(std::vector<std::vector<Rational>> rows);
  void normalize();

  std::vector<std::vector<Rational>> rows_;  // rows_[j][i] = coeff of t^j D^i
};

/// a * b in Q[t, D].
Operator multiply(const Operator& a, const Operator& b);

/// L^dagger = (-1)^r sum_i (-D)^i q_{r-i}(t).
Operator adjoint(const Operator& L);

/// Rescales L so that P_0(D) = D^r; rejects operators whose indicial
/// polynomial has any root other than 0.
Operator validate_mum(const Operator& L);

/// Exact test of q_1 = (r/2) t q_0'.
bool selfadjoint_test(const Operator& L);

/// The polynomial p with p(0) = 1 and p L^dagger = L p, searched up to the
/// given degree (default: degree of L).
PolyT solve_p(const Operator& L, std::optional<unsigned> degree_bound = std::nullopt);

/// Operator with P_0 = D^r and unknown P_1..P_d of degree <= r whose
/// recurrence annihilates every supplied term (seq[0] must be 1).
Operator fit_operator(const RationalSequence& seq, unsigned r, unsigned d);

/// Root of q_0 of smallest modulus at the requested precision, or the
/// override verbatim.
Complex conifold_point(const Operator& L, unsigned precision_bits,
                       const std::optional<Complex>& override_point = std::nullopt);

/// Parses the operator language; see parser.hpp for the grammar.
Operator parse_operator(const std::string& text);

}  // namespace kforge
