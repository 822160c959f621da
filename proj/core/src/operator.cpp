#include "kforge/operator.hpp"

#include <algorithm>

#include "kforge/error.hpp"
#include "kforge/linalg.hpp"
#include "kforge/numeric.hpp"
#include "kforge/seq.hpp"

namespace kforge {

Operator::Operator(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) { normalize(); }

void Operator::normalize() {
  for (auto& row : rows_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

Operator Operator::constant(const Rational& value) { return Operator({{value}}); }
Operator Operator::t() { return Operator({{}, {Rational(1)}}); }
Operator Operator::D() { return Operator({{Rational(0), Rational(1)}}); }

Operator Operator::from_p_form(const std::vector<PolyD>& p_form) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : p_form) rows.push_back(p.coeffs());
  return Operator(std::move(rows));
}

Operator Operator::from_q_form(const std::vector<PolyT>& q) {
  if (q.empty()) return {};
  const std::size_t r = q.size() - 1;
  std::size_t d = 0;
  for (const auto& qi : q) d = std::max<std::size_t>(d, static_cast<std::size_t>(std::max(0L, qi.degree())));
  std::vector<std::vector<Rational>> rows(d + 1, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = 0; j < q[r - i].coeffs().size(); ++j) rows[j][i] = q[r - i].coeffs()[j];
  return Operator(std::move(rows));
}

unsigned Operator::order() const {
  std::size_t r = 0;
  for (const auto& row : rows_)
    if (!row.empty()) r = std::max(r, row.size() - 1);
  return static_cast<unsigned>(r);
}

unsigned Operator::degree() const { return rows_.empty() ? 0U : static_cast<unsigned>(rows_.size() - 1); }

Rational Operator::coeff(std::size_t t_power, std::size_t d_power) const {
  if (t_power >= rows_.size() || d_power >= rows_[t_power].size()) return 0;
  return rows_[t_power][d_power];
}

PolyD Operator::P(std::size_t j) const { return j < rows_.size() ? PolyD(rows_[j]) : PolyD(); }

PolyT Operator::q(std::size_t i) const {
  const unsigned r = order();
  if (i > r) return {};
  std::vector<Rational> c(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) c[j] = coeff(j, r - i);
  return PolyT(std::move(c));
}

std::vector<PolyD> Operator::p_form() const {
  std::vector<PolyD> out;
  for (std::size_t j = 0; j <= degree(); ++j) out.push_back(P(j));
  return out;
}

std::vector<PolyT> Operator::q_form() const {
  std::vector<PolyT> out;
  for (std::size_t i = 0; i <= order(); ++i) out.push_back(q(i));
  return out;
}

namespace {

// Descending "34*D^3+51*D^2+27*D+5"; the first sign is kept only if negative.
std::string poly_text(const PolyD& p) {
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    Rational v = p.coeff(static_cast<std::size_t>(i));
    if (v == 0) continue;
    const bool negative = v < 0;
    if (negative) v = -v;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const bool unit = v == 1 && i > 0;
    if (!unit) out += to_string(v);
    if (i > 0) {
      if (!unit) out += "*";
      out += "D";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string Operator::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    PolyD p = P(j);
    if (p.is_zero()) continue;
    if (j == 0) {
      out += poly_text(p);
      continue;
    }
    const bool all_negative =
        std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c <= 0; });
    if (all_negative) p = -p;
    if (out.empty()) {
      if (all_negative) out += "-";
    } else {
      out += all_negative ? " - " : " + ";
    }
    out += "t";
    if (j > 1) out += "^" + std::to_string(j);
    if (!(p.degree() == 0 && p.leading() == 1)) out += "*(" + poly_text(p) + ")";
  }
  return out;
}

Operator operator+(const Operator& a, const Operator& b) {
  std::vector<std::vector<Rational>> rows(std::max(a.rows_.size(), b.rows_.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const std::size_t n = std::max(j < a.rows_.size() ? a.rows_[j].size() : 0,
                                   j < b.rows_.size() ? b.rows_[j].size() : 0);
    rows[j].assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) rows[j][i] = a.coeff(j, i) + b.coeff(j, i);
  }
  return Operator(std::move(rows));
}

Operator operator-(const Operator& a) { return Rational(-1) * a; }
Operator operator-(const Operator& a, const Operator& b) { return a + (-b); }

Operator operator*(const Rational& s, const Operator& a) {
  auto rows = a.rows_;
  for (auto& row : rows)
    for (auto& x : row) x *= s;
  return Operator(std::move(rows));
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PolyD> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t j = 0; j < a.rows_.size(); ++j) {
    const PolyD aj = a.P(j);
    if (aj.is_zero()) continue;
    for (std::size_t k = 0; k < b.rows_.size(); ++k) {
      const PolyD bk = b.P(k);
      if (bk.is_zero()) continue;
      // t^j A(D) t^k B(D) = t^(j+k) A(D + k) B(D)
      out[j + k] = out[j + k] + aj.shifted(Rational(static_cast<long>(k))) * bk;
    }
  }
  return Operator::from_p_form(out);
}

Operator multiply(const Operator& a, const Operator& b) { return a * b; }

Operator adjoint(const Operator& L) {
  const unsigned r = L.order();
  const Operator minus_d = -Operator::D();
  Operator power = Operator::constant(1);  // (-D)^i
  Operator sum;
  for (unsigned i = 0; i <= r; ++i) {
    const PolyT qi = L.q(r - i);
    std::vector<PolyD> rows;
    for (const auto& c : qi.coeffs()) rows.push_back(PolyD::constant(c));
    sum = sum + power * Operator::from_p_form(rows);
    power = power * minus_d;
  }
  return (r % 2 == 0 ? Rational(1) : Rational(-1)) * sum;
}

Operator validate_mum(const Operator& L) {
  if (L.is_zero()) throw NotMUMError("zero operator");
  const unsigned r = L.order();
  const PolyD p0 = L.P(0);
  if (p0.degree() < static_cast<long>(r))
    throw NotMUMError("indicial polynomial P_0 has degree " + std::to_string(p0.degree()) +
                      " < order " + std::to_string(r));
  for (unsigned i = 0; i < r; ++i)
    if (p0.coeff(i) != 0)
      throw NotMUMError("indicial polynomial " + p0.to_string() + " has a nonzero root");
  const Rational gamma = p0.leading();
  if (gamma == 1) return L;
  return (Rational(1) / gamma) * L;
}

bool selfadjoint_test(const Operator& L) {
  const unsigned r = L.order();
  const PolyT q0 = L.q(0);
  const PolyT t_q0_prime = PolyT::monomial(1) * q0.derivative();
  return L.q(1) == make_rational(static_cast<long>(r), 2) * t_q0_prime;
}

PolyT solve_p(const Operator& L, std::optional<unsigned> degree_bound) {
  const unsigned bound = degree_bound.value_or(L.degree());
  const Operator Ld = adjoint(L);
  // Column i holds t^i L^dagger - L t^i; p = sum u_i t^i solves sum u_i col_i = 0.
  std::vector<Operator> columns;
  Operator ti = Operator::constant(1);
  for (unsigned i = 0; i <= bound; ++i) {
    columns.push_back(ti * Ld - L * ti);
    ti = ti * Operator::t();
  }
  std::size_t max_t = 0, max_d = 0;
  for (const auto& c : columns) {
    max_t = std::max<std::size_t>(max_t, c.degree());
    max_d = std::max<std::size_t>(max_d, c.order());
  }
  linalg::Matrix rows;
  for (std::size_t j = 0; j <= max_t; ++j)
    for (std::size_t i = 0; i <= max_d; ++i) {
      linalg::Vector row;
      bool any = false;
      for (const auto& c : columns) {
        row.push_back(c.coeff(j, i));
        any = any || row.back() != 0;
      }
      if (any) rows.push_back(std::move(row));
    }
  const auto kernel = linalg::nullspace(std::move(rows), bound + 1);
  if (kernel.empty()) throw NoSolutionError("no polynomial p of degree <= " + std::to_string(bound));
  if (kernel.size() > 1)
    throw AmbiguousError("p solution space has dimension " + std::to_string(kernel.size()));
  const auto& v = kernel.front();
  if (v[0] == 0) throw NoSolutionError("every solution p has p(0) = 0");
  std::vector<Rational> coeffs;
  for (const auto& x : v) coeffs.push_back(x / v[0]);
  return PolyT(std::move(coeffs));
}

Operator fit_operator(const RationalSequence& seq, unsigned r, unsigned d) {
  if (seq.start_index != 0 || seq.terms.empty() || seq.terms[0] != 1)
    throw DomainError("fit_operator needs a sequence starting a_0 = 1");
  if (d == 0) throw DomainError("fit_operator needs degree d >= 1");
  const std::size_t unknowns = static_cast<std::size_t>(d) * (r + 1);  // c[k-1][i] for P_k
  linalg::Matrix a;
  linalg::Vector b;
  const auto& x = seq.terms;
  for (std::size_t m = 1; m < x.size(); ++m) {
    linalg::Vector row(unknowns);
    for (std::size_t k = 1; k <= std::min<std::size_t>(m, d); ++k) {
      const Rational base(static_cast<long>(m - k));
      Rational pw = 1;
      for (unsigned i = 0; i <= r; ++i) {
        row[(k - 1) * (r + 1) + i] = pw * x[m - k];
        pw *= base;
      }
    }
    a.push_back(std::move(row));
    b.push_back(-rational_pow(Rational(static_cast<long>(m)), r) * x[m]);
  }
  const auto sol = linalg::solve(std::move(a), std::move(b), unknowns);
  if (!sol) throw NoOperatorError("no operator of order " + std::to_string(r) + " and degree " +
                                  std::to_string(d) + " annihilates the sequence");
  if (!sol->homogeneous.empty())
    throw AmbiguousError("operator fit is underdetermined (" + std::to_string(sol->homogeneous.size()) +
                         " free parameters); supply more terms");
  std::vector<PolyD> p_form{PolyD::monomial(r)};
  for (unsigned k = 1; k <= d; ++k)
    p_form.emplace_back(std::vector<Rational>(sol->particular.begin() + (k - 1) * (r + 1),
                                              sol->particular.begin() + k * (r + 1)));
  Operator L = Operator::from_p_form(p_form);
  const RationalSequence check = period_coeffs(L, x.size() - 1);
  if (check.terms != x) throw NoOperatorError("fitted operator does not reproduce the sequence");
  return L;
}

Complex conifold_point(const Operator& L, unsigned precision_bits, const std::optional<Complex>& override_point) {
  if (override_point) return *override_point;
  return smallest_root(L.q(0), precision_bits);
}

}  // namespace kforge
