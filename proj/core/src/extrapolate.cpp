#include "kforge/numeric.hpp"

namespace kforge {

std::vector<std::size_t> thinned_nodes(std::size_t K, std::size_t count) {
  std::vector<std::size_t> nodes;
  std::size_t k = K;
  while (k >= 1 && nodes.size() < count) {
    nodes.push_back(k);
    std::size_t next = k * 9 / 10;
    if (next >= k) next = k - 1;
    k = next;
  }
  return {nodes.rbegin(), nodes.rend()};
}

LimitEstimate extrapolate_limit(const std::vector<BigFloat>& x, const std::vector<std::size_t>& k,
                                unsigned depth, bool half_power) {
  if (x.size() != k.size()) throw DomainError("sample and index lists differ in length");
  if (x.size() < static_cast<std::size_t>(depth) + 1 || depth == 0)
    throw InsufficientDataError("need at least depth+1 = " + std::to_string(depth + 1) + " samples, got " +
                                std::to_string(x.size()));
  for (std::size_t i = 1; i < k.size(); ++i)
    if (k[i] <= k[i - 1]) throw DomainError("sample indices must be strictly increasing");
  if (k.front() == 0) throw DomainError("sample index 0 has no 1/k");

  const std::size_t first = x.size() - depth - 1;
  unsigned prec = x[first].precision_bits();
  for (std::size_t i = first; i < x.size(); ++i) prec = std::min(prec, x[i].precision_bits());

  std::vector<BigFloat> h, p;
  LimitEstimate out;
  for (std::size_t i = first; i < x.size(); ++i) {
    BigFloat hi = BigFloat(1L, prec) / static_cast<long>(k[i]);
    h.push_back(half_power ? sqrt(hi) : hi);
    p.push_back(x[i].with_precision(prec));
    out.diagnostics.nodes.push_back(k[i]);
  }
  // p[i] holds the interpolant through nodes i..i+m evaluated at h = 0.
  std::vector<BigFloat> penultimate;
  for (unsigned m = 1; m <= depth; ++m) {
    if (m == depth) penultimate = {p[0], p[1]};
    for (std::size_t i = 0; i + m <= depth; ++i)
      p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
  }
  out.value = p[0];
  out.diagnostics.depth = depth;
  out.diagnostics.spread = max(abs(p[0] - penultimate[0]), abs(p[0] - penultimate[1]));
  out.diagnostics.precision_warning = out.diagnostics.spread > epsilon(prec / 4, prec);
  return out;
}

}  // namespace kforge
