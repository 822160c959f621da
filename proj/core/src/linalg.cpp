#include "kforge/linalg.hpp"

#include <utility>

namespace kforge::linalg {

namespace {

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<Vector> kernel_from_rref(const Matrix& m, const std::vector<std::size_t>& pivots,
                                     std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> nullspace(Matrix a, std::size_t cols) {
  const auto pivots = rref(a, cols);
  return kernel_from_rref(a, pivots, cols);
}

std::optional<AffineSolution> solve(Matrix a, Vector b, std::size_t cols) {
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const auto pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  AffineSolution out;
  out.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = a[r][cols];
  out.homogeneous = kernel_from_rref(a, pivots, cols);
  return out;
}

}  // namespace kforge::linalg
