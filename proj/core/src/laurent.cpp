#include "kforge/laurent.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <regex>
#include <unordered_map>

#include "expression_parser.hpp"
#include "kforge/error.hpp"

namespace kforge {

LaurentPoly LaurentPoly::constant(std::size_t variables, const Rational& value) {
  LaurentPoly p(variables);
  p.add_term(Exponents(variables, 0), value);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t variables, std::size_t index) {
  LaurentPoly p(variables);
  Exponents e(variables, 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

Rational LaurentPoly::constant_term() const {
  auto it = terms_.find(Exponents(n_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != n_) throw DomainError("exponent tuple has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.n_ != b.n_) throw DomainError("Laurent polynomials in different numbers of variables");
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + LaurentPoly::constant(b.n_, Rational(-1)) * b;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.n_ != b.n_) throw DomainError("Laurent polynomials in different numbers of variables");
  LaurentPoly out(a.n_);
  LaurentPoly::Exponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::power(long e) const {
  if (e < 0) {
    if (!is_monomial()) throw NonPolynomialError("only a monomial can be raised to a negative power");
    const auto& [ex, c] = *terms_.begin();
    if (c == 0) throw DomainError("division by zero");
    Exponents neg(ex);
    for (auto& x : neg) x = -x;
    LaurentPoly inv(n_);
    inv.add_term(neg, Rational(1) / c);
    return inv.power(-e);
  }
  LaurentPoly out = constant(n_, Rational(1));
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

LaurentPoly LaurentPoly::permuted(const std::vector<std::size_t>& perm) const {
  LaurentPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f(n_);
    for (std::size_t i = 0; i < n_; ++i) f.at(perm.at(i)) = e[i];
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly LaurentPoly::inverted(std::size_t index) const {
  LaurentPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f(e);
    f.at(index) = -f.at(index);
    out.add_term(f, c);
  }
  return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational v = c;
    if (v < 0) {
      out += out.empty() ? "-" : " - ";
      v = -v;
    } else if (!out.empty()) {
      out += " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += kforge::to_string(v);
    } else {
      out += v == 1 ? mono : kforge::to_string(v) + "*" + mono;
    }
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_; ++i) names.push_back("x" + std::to_string(i + 1));
  return to_string(names);
}

namespace {

struct LaurentRing {
  using Value = LaurentPoly;
  const std::vector<std::string>& vars;

  Value constant(const Rational& q) { return LaurentPoly::constant(vars.size(), q); }

  Value identifier(const std::string& name, std::size_t at) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return LaurentPoly::variable(vars.size(), i);
    throw SyntaxError(at, "a declared variable");
  }

  Value power(const Value& base, long e, bool, std::size_t at) {
    if (e < 0 && !base.is_monomial())
      throw NonPolynomialError("negative exponent on a non-monomial at position " + std::to_string(at));
    return base.power(e);
  }

  Value divide(const Value& a, const Value& b, std::size_t at) {
    if (b.is_monomial()) return a * b.power(-1);
    throw NonPolynomialError("division by a non-monomial at position " + std::to_string(at));
  }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& vars) {
  LaurentRing ring{vars};
  return detail::ExpressionParser<LaurentRing>(text, ring).parse();
}

LaurentPoly parse_laurent(const std::string& text) {
  static const std::regex var_re(R"(x(\d+))");
  std::size_t n = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var_re); it != std::sregex_iterator(); ++it)
    n = std::max<std::size_t>(n, std::stoul((*it)[1].str()));
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return parse_laurent(text, vars);
}

RationalSequence period_sequence(const LaurentPoly& phi, std::size_t K, std::size_t max_terms) {
  const std::size_t n = phi.variables();
  RationalSequence out{{Rational(1)}, 0};
  if (K == 0) return out;
  if (phi.is_zero()) {
    out.terms.resize(K + 1, Rational(0));
    return out;
  }
  if (n == 0) {
    const Rational c = phi.constant_term();
    for (std::size_t m = 1; m <= K; ++m) out.terms.push_back(out.terms.back() * c);
    return out;
  }
  // phi = Phi / den with integer Phi.
  Integer den = 1;
  for (const auto& [e, c] : phi.terms()) den = lcm(den, Integer(c.get_den()));
  std::vector<int> lo(n, INT_MAX), hi(n, INT_MIN);
  for (const auto& [e, c] : phi.terms())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }

  // Exponents packed into one 64-bit key, B bits per variable with an offset.
  const unsigned B = static_cast<unsigned>(std::min<std::size_t>(64 / n, 21));
  const std::int64_t offset = std::int64_t{1} << (B - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t reach = static_cast<std::int64_t>(std::max(std::abs(lo[i]), std::abs(hi[i]))) *
                               static_cast<std::int64_t>(K + 1);
    if (reach >= offset) throw DomainError("exponents of phi^K overflow the packed representation");
  }
  auto pack = [&](const std::vector<std::int64_t>& e) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) key |= static_cast<std::uint64_t>(e[i] + offset) << (B * i);
    return key;
  };
  auto unpack = [&](std::uint64_t key, std::size_t i) {
    return static_cast<std::int64_t>((key >> (B * i)) & ((std::uint64_t{1} << B) - 1)) - offset;
  };
  const std::uint64_t zero_key = pack(std::vector<std::int64_t>(n, 0));

  std::vector<std::pair<std::uint64_t, Integer>> factor;
  for (const auto& [e, c] : phi.terms()) {
    std::vector<std::int64_t> e64(e.begin(), e.end());
    factor.emplace_back(pack(e64), Integer(c * Rational(den)));
  }

  // Keep only terms whose exponents can still be cancelled in the remaining steps.
  auto reachable = [&](std::uint64_t key, std::size_t remaining) {
    const auto R = static_cast<std::int64_t>(remaining);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t e = unpack(key, i);
      if (-e < lo[i] * R || -e > hi[i] * R) return false;
    }
    return true;
  };

  std::unordered_map<std::uint64_t, Integer> cur{{zero_key, Integer(1)}};
  Integer den_pow = 1;
  for (std::size_t m = 1; m <= K; ++m) {
    std::unordered_map<std::uint64_t, Integer> next;
    next.reserve(cur.size() * 2);
    for (const auto& [k, v] : cur)
      for (const auto& [fk, fv] : factor) {
        const std::uint64_t key = k + fk - zero_key;
        if (!reachable(key, K - m)) continue;
        auto [it, inserted] = next.try_emplace(key, 0);
        it->second += v * fv;
      }
    for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
    if (next.size() > max_terms)
      throw MemoryBudgetError("phi^" + std::to_string(m) + " needs more than " + std::to_string(max_terms) +
                              " terms");
    cur = std::move(next);
    den_pow *= den;
    auto it = cur.find(zero_key);
    out.terms.push_back(it == cur.end() ? Rational(0) : Rational(it->second, den_pow));
  }
  for (auto& x : out.terms) x.canonicalize();
  return out;
}

Operator laurent_to_operator(const LaurentPoly& phi, unsigned r, unsigned d, std::size_t K) {
  return fit_operator(period_sequence(phi, K), r, d);
}

}  // namespace kforge
