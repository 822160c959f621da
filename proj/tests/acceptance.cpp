// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "kforge/error.hpp"
#include "kforge/invariants.hpp"
#include "kforge/laurent.hpp"
#include "kforge/recognize.hpp"
#include "oracle.hpp"

using namespace kforge;

namespace {

constexpr unsigned kBits = 256;

BigFloat bf(long v) { return BigFloat(v, kBits); }
BigFloat bf(const Rational& q) { return BigFloat(q, kBits); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (detail.tellp() > 0) detail << "; ";
    detail << what << (ok ? "" : " [x]");
  }
};

const Operator& apery() {
  static const Operator L = parse_operator("D^3 - t*(34*D^3+51*D^2+27*D+5) + t^2*(D+1)^3");
  return L;
}

const Operator& quintic() {
  static const Operator L = parse_operator("D^4 - t*(D+1/5)*(D+2/5)*(D+3/5)*(D+4/5)");
  return L;
}

const KappaReport& apery_kappa() {
  static const KappaReport k = kappa_coeffs(apery(), 3, PipelineConfig{});
  return k;
}

BigFloat z(unsigned n) { return oracle::zeta(n, kBits); }

std::vector<BigFloat> quintic_alpha_closed_form() {
  const BigFloat l5 = oracle::log(5, kBits);
  return {bf(1), -bf(5) * l5, bf(10) * z(2) + bf(Rational(25, 2)) * l5 * l5,
          -bf(40) * z(3) - bf(50) * l5 * z(2) - bf(Rational(125, 6)) * l5 * l5 * l5};
}

void criterion1(Outcome& o) {
  const auto& k = apery_kappa();
  const double k1 = abs(k.kappa[1].re).to_double();
  const double e2 = oracle::rel_err(k.kappa[2].re, -bf(2) * z(2));
  const double e3 = oracle::rel_err(k.kappa[3].re, bf(Rational(17, 6)) * z(3));
  o.check(k1 < 1e-5, "|k1| = " + sci(k1));
  o.check(e2 < 1e-5, "k2 vs -2 zeta(2) rel " + sci(e2));
  o.check(e3 < 1e-5, "k3 vs 17/6 zeta(3) rel " + sci(e3));
}

void criterion2(Outcome& o) {
  const AperyReport a = apery_constant(apery(), 1, PipelineConfig{});
  const double e = oracle::rel_err(a.value.re, z(3) / bf(6));
  o.check(e < 1e-6, "kappa(1) vs zeta(3)/6 rel " + sci(e));
  if (!a.b_path_value) {
    o.check(false, "second path missing");
    return;
  }
  const double gap = abs(*a.b_path_value - a.value.re).to_double();
  const double tol = (a.error + *a.b_path_error).to_double();
  o.check(gap <= tol, "paths differ by " + sci(gap) + " within " + sci(tol));
}

void criterion3(Outcome& o) {
  const AperyReport k1 = apery_constant(apery(), 1, PipelineConfig{});
  const std::map<long, BigFloat> known{{0, bf(1)}, {1, k1.value.re}};
  const BigFloat ext = kappa_extend(apery(), known, 2);
  const BigFloat expected = bf(-8) + bf(Rational(5, 6)) * z(3);
  // The difference equation written out by hand at s = 0:
  // -kappa(0) + 5 kappa(1) - kappa(2)/8 = 0.
  const BigFloat oracle_value = bf(8) * (bf(5) * z(3) / bf(6) - bf(1));
  const double oracle_vs_expected = oracle::rel_err(oracle_value, expected);
  o.check(oracle_vs_expected < 1e-6, "oracle confirms -8 + (5/6) zeta(3): rel " + sci(oracle_vs_expected));
  const double e = oracle::rel_err(ext, expected);
  o.check(e < 1e-6, "extended kappa(2) = " + ext.to_string(16) + " vs -8 + (5/6) zeta(3) = " + expected.to_string(16) +
                        ", rel " + sci(e));
  const AperyReport direct = apery_constant(apery(), 2, PipelineConfig{});
  const double d = oracle::rel_err(direct.value.re, ext);
  o.check(d < 1e-4, "direct kappa(2) agrees with extension, rel " + sci(d));
  o.notes.push_back("oracle kappa(2) = -8 + (20/3) zeta(3) = " + oracle_value.to_string(16) + ", extension rel " +
                    sci(oracle::rel_err(ext, oracle_value)));
}

void criterion4(Outcome& o) {
  const HypergeomReport h =
      hypergeom_kappa({Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}, 3, kBits);
  const auto want = quintic_alpha_closed_form();
  double worst = 0;
  for (std::size_t i = 1; i <= 3; ++i) worst = std::max(worst, oracle::rel_err(h.kappa_inverse[i], want[i]));
  o.check(worst < 1e-10, "closed-form alpha_1..3 rel " + sci(worst));
  const AlphaReport a = alpha_coeffs(quintic(), 3, PipelineConfig{});
  double lim = 0;
  for (std::size_t i = 1; i <= 3; ++i) lim = std::max(lim, oracle::rel_err(a.alpha[i].re, want[i]));
  o.check(lim < 1e-3, "limit pipeline alpha_1..3 rel " + sci(lim) + " at K=2000");
}

void criterion5(Outcome& o) {
  const HypergeomReport h =
      hypergeom_kappa({Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}, 3, kBits);
  const auto col = lmhs_column(h.kappa_inverse.coeffs, 3).column;
  const auto out = nilpotent_rescale(col, bf(5) * oracle::log(5, kBits));
  const std::vector<BigFloat> want{bf(1), bf(0), bf(10) * z(2), -bf(40) * z(3)};
  double worst = 0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, oracle::abs_err(out[i], want[i]));
  o.check(worst < 1e-8, "rescaled column vs (1, 0, 10 zeta(2), -40 zeta(3)) abs " + sci(worst));
  const double a = oracle::abs_err(out[2] * bf(5), bf(50) * z(2));
  const double b = oracle::abs_err(out[3] * bf(5), bf(-200) * z(3));
  o.check(std::max(a, b) < 1e-8, "x5 gives 50 zeta(2), -200 zeta(3) abs " + sci(std::max(a, b)));
}

void criterion6(Outcome& o) {
  const Operator L = parse_operator("D - 4*t*(D+1/2)");
  const KappaReport k = kappa_coeffs(L, 5, PipelineConfig{});
  const auto want = oracle::gamma_ratio_series(5, kBits);
  double worst = 0;
  for (std::size_t i = 0; i <= 5; ++i) worst = std::max(worst, oracle::abs_err(k.kappa[i].re, want[i]));
  o.check(worst < 1e-6, "kappa_0..5 vs Gamma(1+s)^2/Gamma(1+2s) abs " + sci(worst));
  const KappaValue v = kappa_at(L, 1, PipelineConfig{});
  const double e = oracle::abs_err(v.value.re, bf(Rational(1, 2)));
  o.check(e < 1e-8, "kappa(1) vs 1/2 abs " + sci(e));
  const Rational lead = kappa_negative_leading(L, 1);
  o.check(lead == -2, "leading coefficient at s=-1 is " + to_string(lead));
}

void criterion7(Outcome& o) {
  const Operator L = parse_operator("D^2 - t*(11*D^2+11*D+3) - t^2*(D+1)^2");
  const AperyReport a = apery_constant(L, 1, PipelineConfig{});
  const double e = oracle::rel_err(a.value.re, z(2) / bf(5));
  o.check(e < 1e-6, "kappa(1) vs zeta(2)/5 rel " + sci(e));
  const auto seq = period_sequence(parse_laurent("(1-x1^-1)*(1-x2^-1)*(1-x1-x2)"), 19);
  const auto rec = period_coeffs(L, 19);
  const bool head = seq.terms[1] == 3 && seq.terms[2] == 19 && seq.terms[3] == 147;
  o.check(seq == rec && seq.size() == 20 && head, "20 constant terms equal the recurrence (1, 3, 19, 147, ...)");
}

void criterion8(Outcome& o) {
  const Operator L = parse_operator("(1-8*t-48*t^2)*D^2-(8*t+96*t^2)*D-(2*t+36*t^2)");
  const bool pform = L.P(0) == PolyD({0, 0, 1}) && L.P(1) == PolyD({-2, -8, -8}) && L.P(2) == PolyD({-36, -96, -48});
  o.check(pform, "P-form " + L.to_string());
  const Complex c = conifold_point(L, kBits);
  const double ce = oracle::abs_err(c.re, bf(Rational(1, 12)));
  o.check(ce < std::ldexp(1.0, -250) && (c.im.is_zero() || abs(c.im).to_double() < std::ldexp(1.0, -250)),
          "conifold point vs 1/12 abs " + sci(ce));
  const AperyReport a = apery_constant(L, 1, PipelineConfig{});
  const double e = oracle::rel_err(a.value.re, oracle::pi(kBits) / (bf(6) * oracle::sqrt(3, kBits)));
  o.check(e < 1e-5, "kappa(1) vs pi/(6 sqrt 3) rel " + sci(e));
}

void criterion9(Outcome& o) {
  const Operator L = laurent_to_operator(parse_laurent("(1+x1+x2^2)^2/(x1*x2) - 8"), 2, 3, 24);
  const PolyT q0 = PolyT({1, 16}) * PolyT({1, 8}) * PolyT({1, 8});
  o.check(L.q(0) == q0, "q0 = " + L.q(0).to_string());
  const PolyT p = solve_p(L);
  o.check(p == PolyT({1, 8}), "p = " + p.to_string());
  o.check(!selfadjoint_test(L), "not self-adjoint");
}

void criterion10(Outcome& o) {
  const Operator L =
      laurent_to_operator(parse_laurent("(1-x1-x2+x1*x2-x1*x2*x3)*(1-x1^-1)*(1-x2^-1)*(1-x3^-1)"), 3, 2, 24);
  o.check(L == apery(), "fitted " + L.to_string());
  o.check(selfadjoint_test(L), "self-adjoint");
  o.check(solve_p(L) == PolyT::constant(1), "p = 1");
}

void criterion11(Outcome& o) {
  std::mt19937_64 rng(20240917);
  int adj = 0;
  for (int i = 0; i < 50; ++i) {
    const Operator A = oracle::random_operator(rng, 4, 3, 20), B = oracle::random_operator(rng, 4, 3, 20);
    adj += adjoint(adjoint(A)) == A && adjoint(multiply(A, B)) == multiply(adjoint(B), adjoint(A));
  }
  o.check(adj == 50, "adjoint involution/anti-homomorphism " + std::to_string(adj) + "/50");

  int seq_ok = 0, seq_total = 0;
  for (int i = 0; i < 10; ++i) {
    const Operator L = oracle::random_mum(rng, 1 + i % 4, 1 + i % 3, 7);
    const auto a = period_coeffs(L, 30);
    const auto A = frobenius_series(L, 30, 2);
    const auto V = frobenius_values(L, 30, Rational(1, 3));
    const auto b = b_sequence(L, 30, 1);
    bool ok = A[0].coeffs == std::vector<Rational>{1, 0, 0};
    for (std::size_t m = 1; m <= 30; ++m) {
      ok = ok && oracle::apply_at(L, a.terms, m) == 0 && A[m].coeffs[0] == a.at(m);
      ok = ok && oracle::apply_at(L, V.terms, m, Rational(1, 3)) == 0;
    }
    for (std::size_t m = 0; m <= 30; ++m) ok = ok && oracle::apply_at(L, b.terms, m) == (m == 1 ? 1 : 0);
    seq_ok += ok;
    ++seq_total;
  }
  o.check(seq_ok == seq_total, "recurrence identities " + std::to_string(seq_ok) + "/" + std::to_string(seq_total));

  const std::vector<Operator> ops{apery(), parse_operator("D - 4*t*(D+1/2)"),
                                  parse_operator("D^2 - t*(11*D^2+11*D+3) - t^2*(D+1)^2")};
  double prod = 0;
  bool resid = true;
  for (const auto& L : ops) {
    const AlphaReport a = alpha_coeffs(L, 3, PipelineConfig{});
    const ComplexSeries p = series_multiply(a.kappa.kappa, a.alpha);
    for (std::size_t i = 0; i <= 3; ++i) prod = std::max(prod, abs(p[i] - Complex(bf(i == 0 ? 1 : 0))).to_double());
    for (const Rational s0 : {Rational(1, 3), Rational(3, 2)}) {
      const ResidualReport r = difference_residual(L, s0, PipelineConfig{});
      resid = resid && r.residual <= r.error;
    }
  }
  o.check(prod < 1e-60, "kappa*alpha = 1 mod s^4, max dev " + sci(prod));
  o.check(resid, "difference residual below error at s = 1/3, 3/2");

  double ex = 0;
  for (int i = 0; i < 20; ++i) {
    const unsigned depth = 2 + i % 12;
    std::vector<Rational> c(depth + 1);
    for (auto& q : c) q = oracle::random_rational(rng, 30);
    const auto nodes = thinned_nodes(2000, depth + 1);
    std::vector<BigFloat> x;
    for (std::size_t n : nodes) {
      Rational v = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * Rational(1, n) + *it;
      x.push_back(bf(v));
    }
    ex = std::max(ex, oracle::abs_err(extrapolate_limit(x, nodes, depth).value, bf(c[0])));
  }
  o.check(ex < 1e-50, "extrapolation exact on polynomials in 1/k, max err " + sci(ex));

  const ConstantBasis basis = ConstantBasis::from_labels({"zeta2", "zeta3"});
  const auto vals = basis.values(kBits);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 20);
  int rec = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> want(vals.size());
    BigFloat x = bf(0);
    for (std::size_t j = 0; j < vals.size(); ++j) {
      want[j] = make_rational(num(rng), den(rng));
      x += bf(want[j]) * vals[j];
    }
    const auto r = x.is_zero() ? std::nullopt : recognize_value(x, basis, 40, 200);
    rec += x.is_zero() || (r && r->coefficients == want);
  }
  o.check(rec == 100, "recognition round trips " + std::to_string(rec) + "/100");
}

void criterion12(Outcome& o) {
  const auto& k = apery_kappa();
  const ConstantBasis basis = ConstantBasis::from_labels({"zeta2", "zeta3"});
  const unsigned prec = supported_bits(k.kappa[3].re, k.errors[3]);
  const auto r = recognize_value(k.kappa[3].re, basis, 100, prec);
  if (!r) {
    o.check(false, "no confident match at " + std::to_string(prec) + " bits");
    return;
  }
  o.check(r->coefficients == std::vector<Rational>{0, 0, Rational(17, 6)}, "kappa_3 = " + r->text);
  const auto v2 = basis.values(2 * prec);
  BigFloat y(0L, 2 * prec);
  for (std::size_t i = 0; i < v2.size(); ++i) y += BigFloat(r->coefficients[i], 2 * prec) * v2[i];
  const double resid = abs(y - k.kappa[3].re).to_double();
  o.check(resid < std::ldexp(1.0, -static_cast<int>(prec) / 2),
          "re-check at " + std::to_string(2 * prec) + " bits residual " + sci(resid));
}

const std::vector<std::pair<const char*, std::function<void(Outcome&)>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> list{
      {"Apery Frobenius constants", criterion1},
      {"Apery constant kappa(1)", criterion2},
      {"kappa extension to kappa(2)", criterion3},
      {"mirror quintic LMHS periods", criterion4},
      {"quintic renormalization", criterion5},
      {"central binomial closed form", criterion6},
      {"zeta(2) family", criterion7},
      {"q-form family", criterion8},
      {"Yukawa polynomial", criterion9},
      {"Apery operator from Laurent polynomial", criterion10},
      {"property suites", criterion11},
      {"recognition of kappa_3", criterion12},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kforge acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const int n = static_cast<int>(i + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria()[i].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d: %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", n, criteria()[i].first, secs,
                o.detail.str().c_str());
    for (const auto& note : o.notes) std::printf("     criterion %2d note: %s\n", n, note.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
