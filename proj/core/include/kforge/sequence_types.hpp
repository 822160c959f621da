#pragma once

#include <cstddef>
#include <vector>

#include "kforge/rational.hpp"

namespace kforge {

/// Contiguous exact sequence x_{start}, x_{start+1}, ...
struct RationalSequence {
  std::vector<Rational> terms;
  std::size_t start_index = 0;

  std::size_t size() const { return terms.size(); }
  /// Last index held (start_index + size - 1).
  std::size_t last_index() const { return start_index + terms.size() - 1; }
  const Rational& at(std::size_t index) const { return terms.at(index - start_index); }
  friend bool operator==(const RationalSequence&, const RationalSequence&) = default;
};

/// Truncated power series in s: coefficients of s^0..s^M.
struct SeriesSRational {
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  friend bool operator==(const SeriesSRational&, const SeriesSRational&) = default;
};

}  // namespace kforge
