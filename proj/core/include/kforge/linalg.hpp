#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kforge/rational.hpp"

namespace kforge::linalg {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

/// Basis of {x : A x = 0}; A has `cols` columns (rows may be empty).
std::vector<Vector> nullspace(Matrix a, std::size_t cols);

struct AffineSolution {
  Vector particular;
  std::vector<Vector> homogeneous;
};

/// Solutions of A x = b, or nullopt when the system is inconsistent.
std::optional<AffineSolution> solve(Matrix a, Vector b, std::size_t cols);

}  // namespace kforge::linalg
