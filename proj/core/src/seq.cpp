#include "kforge/seq.hpp"

#include <deque>

#include "kforge/error.hpp"

namespace kforge {

namespace {

Rational from_rational(const Rational& q, const Rational&) { return q; }
BigFloat from_rational(const Rational& q, const BigFloat& like) { return BigFloat(q, like.precision_bits()); }

// A_m(s0 + sigma) = -(m + s0 + sigma)^(-r) sum_j A_{m-j}(s0 + sigma) P_j(m - j + s0 + sigma)
template <class T>
class FrobeniusRecurrence {
 public:
  FrobeniusRecurrence(const Operator& L, const Rational& s0, std::size_t M, T zero)
      : s0_(s0), M_(M), r_(L.order()), zero_(std::move(zero)) {
    if (s0 < 0 && s0.get_den() == 1)
      throw DomainError("expansion point " + to_string(s0) + " is a pole of the deformed recurrence");
    for (std::size_t j = 1; j <= L.degree(); ++j) p_.push_back(L.P(j));
    std::vector<T> first(M + 1, zero_);
    first[0] = from_rational(Rational(1), zero_);
    history_.push_front(first);
  }

  const std::vector<T>& current() const { return history_.front(); }
  std::size_t index() const { return m_; }

  void step() {
    ++m_;
    std::vector<T> acc(M_ + 1, zero_);
    for (std::size_t j = 1; j <= p_.size() && j <= m_; ++j) {
      if (p_[j - 1].is_zero()) continue;
      const std::vector<T>& prev = history_[j - 1];
      const PolyD shifted = p_[j - 1].shifted(Rational(static_cast<long>(m_ - j)) + s0_);
      for (std::size_t a = 0; a <= M_; ++a) {
        if (prev[a] == 0) continue;
        for (std::size_t b = 0; a + b <= M_ && b < shifted.coeffs().size(); ++b)
          acc[a + b] += prev[a] * from_rational(shifted.coeffs()[b], zero_);
      }
    }
    // (u + sigma)^(-r) = sum_i binom(-r, i) u^(-r-i) sigma^i
    const Rational u = Rational(static_cast<long>(m_)) + s0_;
    std::vector<T> inv;
    Rational c = Rational(1) / rational_pow(u, r_);
    for (std::size_t i = 0; i <= M_; ++i) {
      inv.push_back(from_rational(c, zero_));
      c *= make_rational(-static_cast<long>(r_ + i), static_cast<long>(i + 1)) / u;
    }
    std::vector<T> next(M_ + 1, zero_);
    for (std::size_t a = 0; a <= M_; ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; a + b <= M_; ++b) next[a + b] -= acc[a] * inv[b];
    }
    history_.push_front(std::move(next));
    if (history_.size() > std::max<std::size_t>(p_.size(), 1)) history_.pop_back();
  }

 private:
  Rational s0_;
  std::size_t M_;
  unsigned r_;
  T zero_;
  std::vector<PolyD> p_;
  std::deque<std::vector<T>> history_;  // history_[i] = A_{m - i}
  std::size_t m_ = 0;
};

template <class T>
std::vector<std::vector<BigFloat>> sample_with(const Operator& L, const Rational& s0, std::size_t M,
                                               const std::vector<std::size_t>& indices, unsigned bits,
                                               T zero) {
  std::vector<std::vector<BigFloat>> out;
  if (indices.empty()) return out;
  FrobeniusRecurrence<T> rec(L, s0, M, std::move(zero));
  for (std::size_t idx : indices) {
    if (!out.empty() && idx <= rec.index()) throw DomainError("sample indices must be strictly increasing");
    while (rec.index() < idx) rec.step();
    std::vector<BigFloat> row;
    for (const auto& v : rec.current()) {
      if constexpr (std::is_same_v<T, Rational>) {
        row.emplace_back(v, bits);
      } else {
        row.push_back(v.with_precision(bits));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<SeriesSRational> frobenius_series(const Operator& L, std::size_t K, std::size_t M) {
  const Operator V = validate_mum(L);
  FrobeniusRecurrence<Rational> rec(V, Rational(0), M, Rational(0));
  std::vector<SeriesSRational> out{{rec.current()}};
  for (std::size_t k = 1; k <= K; ++k) {
    rec.step();
    out.push_back({rec.current()});
  }
  return out;
}

RationalSequence frobenius_values(const Operator& L, std::size_t K, const Rational& s) {
  const Operator V = validate_mum(L);
  FrobeniusRecurrence<Rational> rec(V, s, 0, Rational(0));
  RationalSequence out{{rec.current()[0]}, 0};
  for (std::size_t k = 1; k <= K; ++k) {
    rec.step();
    out.terms.push_back(rec.current()[0]);
  }
  return out;
}

RationalSequence period_coeffs(const Operator& L, std::size_t K) { return frobenius_values(L, K, Rational(0)); }

RationalSequence atilde_coeffs(const RationalSequence& a, const PolyT& p, std::size_t K) {
  if (p.coeff(0) != 1) throw DomainError("atilde_coeffs needs p(0) = 1");
  if (a.start_index != 0 || a.size() < K + 1) throw InsufficientDataError("need a_0..a_K");
  RationalSequence out{{}, 0};
  for (std::size_t m = 0; m <= K; ++m) {
    Rational v = a.terms[m];
    for (std::size_t i = 1; i <= m && i < p.coeffs().size(); ++i) v -= p.coeffs()[i] * out.terms[m - i];
    out.terms.push_back(v);
  }
  return out;
}

RationalSequence b_sequence(const Operator& L, std::size_t K, unsigned long ell) {
  if (ell == 0) throw DomainError("b_sequence needs ell >= 1");
  const Operator V = validate_mum(L);
  const Rational scale = Rational(1) / rational_pow(Rational(static_cast<long>(ell)), V.order());
  RationalSequence out{std::vector<Rational>(std::min<std::size_t>(K + 1, ell)), 0};
  if (K < ell) return out;
  const RationalSequence A = frobenius_values(V, K - ell, Rational(static_cast<long>(ell)));
  for (const auto& x : A.terms) out.terms.push_back(x * scale);
  return out;
}

std::vector<std::vector<BigFloat>> sample_expansion(const Operator& L, const Rational& s0, std::size_t M,
                                                    const std::vector<std::size_t>& indices,
                                                    unsigned precision_bits, Arithmetic mode) {
  const Operator V = validate_mum(L);
  if (mode == Arithmetic::Exact) return sample_with<Rational>(V, s0, M, indices, precision_bits, Rational(0));
  return sample_with<BigFloat>(V, s0, M, indices, precision_bits, BigFloat(0L, precision_bits + 64));
}

}  // namespace kforge
