#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kforge/operator.hpp"
#include "kforge/rational.hpp"
#include "kforge/sequence_types.hpp"

namespace kforge {

/// Sparse Laurent polynomial over Q in a fixed number of variables.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  explicit LaurentPoly(std::size_t variables = 0) : n_(variables) {}
  static LaurentPoly constant(std::size_t variables, const Rational& value);
  /// x_(index+1)
  static LaurentPoly variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;

  /// Adds c x^e (dropping the term if it cancels).
  void add_term(const Exponents& e, const Rational& c);
  /// Negative exponents are allowed only for monomials.
  LaurentPoly power(long e) const;
  /// Relabels x_i as x_perm[i].
  LaurentPoly permuted(const std::vector<std::size_t>& perm) const;
  /// x_i -> 1/x_i.
  LaurentPoly inverted(std::size_t index) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::size_t n_;
  std::map<Exponents, Rational> terms_;
};

/// Parses the Laurent language over the named variables.
LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& vars);
/// Same, with variables x1..xn where n is the largest index that appears.
LaurentPoly parse_laurent(const std::string& text);

inline constexpr std::size_t kDefaultTermBudget = 5'000'000;

/// a_m = constant term of phi^m for m = 0..K.
RationalSequence period_sequence(const LaurentPoly& phi, std::size_t K, std::size_t max_terms = kDefaultTermBudget);

/// Fits an operator of order r and degree d to the first K+1 constant terms.
Operator laurent_to_operator(const LaurentPoly& phi, unsigned r, unsigned d, std::size_t K);

}  // namespace kforge
