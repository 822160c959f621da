#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "kforge/error.hpp"
#include "kforge/invariants.hpp"
#include "kforge/laurent.hpp"
#include "kforge/recognize.hpp"

namespace kforge::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Operator load_operator(const CommandArgs& a, Report& rep) {
  std::string text;
  if (a.op_file) {
    text = read_file(*a.op_file);
    rep.input["operator_file"] = *a.op_file;
  } else if (a.op_text) {
    text = *a.op_text;
  } else {
    throw DomainError("an operator is required (--op FILE or --op-text TEXT)");
  }
  Operator L = parse_operator(text);
  rep.input["operator"] = L.to_string();
  return L;
}

LaurentPoly load_laurent(const CommandArgs& a, Report& rep) {
  std::string text;
  if (a.laurent_file) {
    text = read_file(*a.laurent_file);
    rep.input["laurent_file"] = *a.laurent_file;
  } else if (a.laurent_text) {
    text = *a.laurent_text;
  } else {
    throw DomainError("a Laurent polynomial is required (--laurent FILE or --laurent-text TEXT)");
  }
  LaurentPoly phi = parse_laurent(text);
  rep.input["laurent"] = phi.to_string();
  return phi;
}

bool has_laurent(const CommandArgs& a) { return a.laurent_file || a.laurent_text; }

RationalSequence load_sequence(const std::string& path) {
  const std::string text = read_file(path);
  RationalSequence seq{{}, 0};
  try {
    const Json j = Json::parse(text);
    const Json& arr = j.is_object() ? j.at("terms") : j;
    for (const auto& v : arr) seq.terms.push_back(parse_exact(v.is_string() ? v.get<std::string>() : v.dump()));
  } catch (const nlohmann::json::exception&) {
    std::string tok;
    std::stringstream ss(text);
    seq.terms.clear();
    while (ss >> tok) {
      if (tok[0] == '#') {
        std::getline(ss, tok);
        continue;
      }
      seq.terms.push_back(parse_exact(tok));
    }
  }
  return seq;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

Json complex_c(Report& rep, const Complex& c, unsigned bits) {
  if (!(c.im.is_zero() && c.re.sign() > 0)) rep.flag("principal-branch-log-c");
  return rep.number(c, epsilon(bits, 64));
}

void flag_reliability(const RunConfig& cfg, Report& rep) {
  if (rep.spread() > cfg.tolerance_value()) rep.flag("UNRELIABLE");
}

std::optional<Recognition> try_recognize(const BigFloat& x, const BigFloat& err, const std::string& basis_text,
                                         unsigned long max_den, const std::optional<BigFloat>& c) {
  const ConstantBasis basis = ConstantBasis::from_labels(split(basis_text, ','), c);
  return recognize_value(x, basis, max_den, supported_bits(x, err));
}

Json recognition_json(const std::optional<Recognition>& r) {
  if (!r) return nullptr;
  return r->text;
}

std::size_t default_order(const RunConfig& cfg, const Operator& L) {
  return cfg.M ? *cfg.M : static_cast<std::size_t>(validate_mum(L).order()) + 2;
}

Json p_form_json(const Operator& L) {
  Json arr = Json::array();
  for (const auto& p : L.p_form()) arr.push_back(p.to_string());
  return arr;
}

Json q_form_json(const Operator& L) {
  Json arr = Json::array();
  for (const auto& q : L.q_form()) arr.push_back(q.to_string());
  return arr;
}

Json series_json(Report& rep, const ComplexSeries& s, const std::vector<BigFloat>& errs,
                 const std::optional<std::string>& basis, unsigned long max_den, const std::optional<BigFloat>& c) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    Json e = rep.number(s[i], errs[i]);
    e["index"] = i;
    if (basis && s[i].im.is_zero()) e["recognized"] = recognition_json(try_recognize(s[i].re, errs[i], *basis, max_den, c));
    arr.push_back(e);
  }
  return arr;
}

// "5*log(5)", "-log(2)", "1.25", "3/4"
BigFloat parse_lambda(const std::string& text, unsigned bits) {
  static const std::regex log_re(R"(\s*([-+]?[0-9./eE+-]*)\s*\*?\s*log\(\s*([0-9]+(?:/[0-9]+)?)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, log_re)) {
    std::string coeff = m[1].str();
    Rational k = 1;
    if (coeff == "-") {
      k = -1;
    } else if (!coeff.empty() && coeff != "+") {
      k = parse_exact(coeff);
    }
    return BigFloat(k, bits) * log_rational(parse_rational(m[2].str()), bits);
  }
  return parse_number(text, bits);
}

}  // namespace

void cmd_parse(const RunConfig&, const CommandArgs& a, Report& rep) {
  const Operator L = load_operator(a, rep);
  rep.result["operator"] = L.to_string();
  rep.result["order"] = L.order();
  rep.result["degree"] = L.degree();
  rep.result["p_form"] = p_form_json(L);
  rep.result["q_form"] = q_form_json(L);
  try {
    rep.result["normalized"] = validate_mum(L).to_string();
    rep.result["mum"] = true;
  } catch (const NotMUMError& e) {
    rep.result["mum"] = false;
    rep.result["mum_error"] = e.what();
  }
}

void cmd_periods(const RunConfig&, const CommandArgs& a, Report& rep) {
  rep.input["count"] = a.count;
  if (has_laurent(a)) {
    rep.result["sequence"] = rep.sequence(period_sequence(load_laurent(a, rep), a.count));
  } else {
    rep.result["sequence"] = rep.sequence(period_coeffs(load_operator(a, rep), a.count));
  }
}

void cmd_frobenius(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  const std::size_t M = default_order(cfg, L);
  const Rational s0 = a.s ? parse_exact(*a.s) : Rational(0);
  rep.input["count"] = a.count;
  rep.input["s0"] = to_wire(s0);
  Json arr = Json::array();
  if (s0 == 0) {
    for (const auto& A : frobenius_series(L, a.count, M)) {
      Json coeffs = Json::array();
      for (const auto& c : A.coeffs) coeffs.push_back(to_wire(c));
      arr.push_back(Json{{"coeffs", coeffs}, {"err_est", "0"}});
    }
  } else {
    const auto vals = frobenius_values(L, a.count, s0);
    for (const auto& v : vals.terms) arr.push_back(Json{{"coeffs", Json::array({to_wire(v)})}, {"err_est", "0"}});
  }
  rep.result["order"] = s0 == 0 ? M : 0;
  rep.result["series"] = arr;
}

void cmd_kappa(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  const std::size_t M = default_order(cfg, L);
  const KappaReport k = kappa_coeffs(L, M, cfg.pipeline(), a.dagger);
  rep.result["c"] = complex_c(rep, k.c, cfg.precision_bits);
  rep.result["dagger"] = k.dagger;
  rep.result["kappa"] = series_json(rep, k.kappa, k.errors, a.basis, a.max_den, k.c.re);
  Json lim = Json::array();
  for (const auto& d : k.limits) lim.push_back(rep.limit(d));
  rep.result["limits"] = lim;
  rep.result["selfadjoint"] = selfadjoint_test(L);
  if (!selfadjoint_test(L)) rep.flag("p-not-one: plain and dagger kappa differ from index r");
  flag_reliability(cfg, rep);
}

void cmd_alpha(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  const std::size_t M = default_order(cfg, L);
  const AlphaReport al = alpha_coeffs(L, M, cfg.pipeline(), a.dagger);
  rep.result["c"] = complex_c(rep, al.kappa.c, cfg.precision_bits);
  rep.result["dagger"] = al.kappa.dagger;
  rep.result["alpha"] = series_json(rep, al.alpha, al.errors, a.basis, a.max_den, al.kappa.c.re);
  rep.result["kappa"] = series_json(rep, al.kappa.kappa, al.kappa.errors, std::nullopt, a.max_den, std::nullopt);
  for (const auto& d : al.kappa.limits) rep.note_diagnostics(d);
  flag_reliability(cfg, rep);
}

void cmd_lmhs(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  std::vector<BigFloat> alpha, errs;
  unsigned n = 0;
  if (!a.params.empty()) {
    std::vector<Rational> params;
    for (const auto& p : a.params) params.push_back(parse_exact(p));
    rep.input["params"] = a.params;
    n = static_cast<unsigned>(params.size()) - 1;
    const HypergeomReport h = hypergeom_kappa(params, n, cfg.precision_bits);
    alpha = h.kappa_inverse.coeffs;
    for (const auto& x : alpha) errs.push_back(ldexp(max(abs(x), BigFloat(1L, 64)), 8 - static_cast<long>(cfg.precision_bits)));
  } else {
    const Operator L = validate_mum(load_operator(a, rep));
    n = L.order() - 1;
    const AlphaReport al = alpha_coeffs(L, n, cfg.pipeline());
    for (std::size_t i = 0; i <= n; ++i) {
      alpha.push_back(al.alpha[i].re);
      errs.push_back(al.errors[i]);
    }
    for (const auto& d : al.kappa.limits) rep.note_diagnostics(d);
  }
  const LMHSColumnReport col = lmhs_column(alpha, n);
  Json column = Json::array();
  for (std::size_t i = 0; i <= n; ++i) column.push_back(rep.number(col.column[i], errs[i]));
  rep.result["column"] = column;
  Json matrix = Json::array();
  for (const auto& row : col.matrix) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(decimal(x));
    matrix.push_back(r);
  }
  rep.result["matrix"] = matrix;
  std::vector<BigFloat> out = col.column;
  if (a.lambda) {
    const BigFloat lambda = parse_lambda(*a.lambda, cfg.precision_bits);
    rep.input["lambda"] = *a.lambda;
    out = nilpotent_rescale(out, lambda);
    Json r = Json::array();
    for (std::size_t i = 0; i < out.size(); ++i) r.push_back(rep.number(out[i], errs[i]));
    rep.result["rescaled"] = r;
  }
  if (!a.scale.empty()) {
    if (a.scale.size() != out.size()) throw DomainError("--scale needs one factor per column entry");
    rep.input["scale"] = a.scale;
    Json r = Json::array();
    for (std::size_t i = 0; i < out.size(); ++i) {
      const BigFloat f = parse_number(a.scale[i], cfg.precision_bits);
      r.push_back(rep.number(out[i] * f, errs[i] * abs(f)));
    }
    rep.result["scaled"] = r;
  }
  flag_reliability(cfg, rep);
}

void cmd_apery(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  rep.input["ell"] = a.ell;
  const AperyReport ap = apery_constant(L, a.ell, cfg.pipeline());
  rep.result["c"] = complex_c(rep, ap.c, cfg.precision_bits);
  Json v = rep.number(ap.value, ap.error);
  rep.result["value"] = v["value"];
  if (v.contains("imag")) rep.result["imag"] = v["imag"];
  rep.result["err_est"] = v["err_est"];
  rep.result["direct_path"] = rep.limit(ap.direct);
  if (ap.b_path_value) {
    Json b = rep.number(*ap.b_path_value, *ap.b_path_error);
    b["limit"] = rep.limit(*ap.b_path);
    rep.result["b_path"] = b;
  } else {
    rep.result["b_path"] = nullptr;
  }
  const std::string basis = a.basis.value_or("zeta2,zeta3");
  rep.result["basis"] = basis;
  rep.result["recognized"] =
      ap.value.im.is_zero() ? recognition_json(try_recognize(ap.value.re, ap.error, basis, a.max_den, ap.c.re)) : nullptr;
  flag_reliability(cfg, rep);
}

void cmd_extend(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  const long d = L.degree();
  rep.input["target"] = a.target;
  const unsigned bits = cfg.precision_bits;
  std::map<long, BigFloat> known, known_err;
  if (!a.known.empty()) {
    for (const auto& kv : a.known) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw DomainError("--known entries look like s=value");
      const long s = std::stol(kv.substr(0, eq));
      known[s] = parse_number(kv.substr(eq + 1), bits);
      known_err[s] = BigFloat(0L, 64);
    }
    rep.input["known"] = a.known;
  } else {
    known[0] = BigFloat(1L, bits);
    known_err[0] = BigFloat(0L, 64);
    for (long l = 1; l < d; ++l) {
      const AperyReport ap = apery_constant(L, static_cast<unsigned long>(l), cfg.pipeline());
      known[l] = ap.value.re;
      known_err[l] = ap.error;
    }
  }
  Json chain = Json::array();
  for (long t = known.rbegin()->first + 1; t <= a.target; ++t) {
    const std::vector<Rational> w = extension_coefficients(L, t);
    BigFloat err(0L, 64);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const long s = t - d + static_cast<long>(k);
      if (!known_err.count(s)) throw InsufficientDataError("kappa(" + std::to_string(s) + ") is not known");
      err += abs(BigFloat(w[k], 64)) * known_err.at(s);
    }
    known[t] = kappa_extend(L, known, t);
    known_err[t] = err;
    Json step = rep.number(known[t], err);
    step["s"] = t;
    Json weights = Json::array();
    for (const auto& x : w) weights.push_back(to_wire(x));
    step["weights"] = weights;
    chain.push_back(step);
  }
  if (!known.count(a.target)) throw DomainError("target is already among the known values");
  Json used = Json::array();
  for (const auto& [s, v] : known)
    if (s < a.target) {
      Json e = rep.number(v, known_err[s]);
      e["s"] = s;
      used.push_back(e);
    }
  rep.result["known"] = used;
  rep.result["chain"] = chain;
  Json v = rep.number(known[a.target], known_err[a.target]);
  rep.result["value"] = v["value"];
  rep.result["err_est"] = v["err_est"];
  if (a.direct) {
    const AperyReport ap = apery_constant(L, static_cast<unsigned long>(a.target), cfg.pipeline());
    Json dj = rep.number(ap.value, ap.error);
    dj["difference"] = decimal_err(abs(ap.value.re - known[a.target]));
    rep.result["direct"] = dj;
  }
  flag_reliability(cfg, rep);
}

void cmd_adjoint(const RunConfig&, const CommandArgs& a, Report& rep) {
  const Operator L = load_operator(a, rep);
  const Operator Ld = adjoint(L);
  rep.result["adjoint"] = Ld.to_string();
  rep.result["p_form"] = p_form_json(Ld);
  rep.result["q_form"] = q_form_json(Ld);
  rep.result["equals_input"] = Ld == L;
}

void cmd_selfcheck(const RunConfig&, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  const bool sa = selfadjoint_test(L);
  rep.result["selfadjoint"] = sa;
  try {
    const PolyT p = solve_p(L, a.degree_bound);
    const bool one = p == PolyT::constant(1);
    rep.result["p"] = p.to_string();
    rep.result["p_is_one"] = one;
    rep.result["consistent"] = one == sa;
    if (one != sa) rep.flag("selfadjoint-test-disagrees-with-p");
  } catch (const Error& e) {
    rep.result["p"] = nullptr;
    rep.result["p_error"] = e.kind() + ": " + e.what();
  }
}

void cmd_p_poly(const RunConfig&, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  if (a.degree_bound) rep.input["degree_bound"] = *a.degree_bound;
  const PolyT p = solve_p(L, a.degree_bound);
  rep.result["p"] = p.to_string();
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_wire(c));
  rep.result["coefficients"] = coeffs;
  rep.result["err_est"] = "0";
}

void cmd_fit(const RunConfig&, const CommandArgs& a, Report& rep) {
  if (!a.order_r || !a.degree_d) throw DomainError("fit needs --order r and --degree d");
  const unsigned r = *a.order_r, d = *a.degree_d;
  rep.input["order"] = r;
  rep.input["degree"] = d;
  RationalSequence seq;
  if (a.seq_file) {
    seq = load_sequence(*a.seq_file);
    rep.input["sequence_file"] = *a.seq_file;
  } else {
    const std::size_t need = 2 * static_cast<std::size_t>(d) * (r + 1) + r + 2;
    const std::size_t K = std::max<std::size_t>(a.count, need + 4);
    rep.input["count"] = K;
    seq = period_sequence(load_laurent(a, rep), K);
  }
  const Operator L = fit_operator(seq, r, d);
  rep.result["operator"] = L.to_string();
  rep.result["p_form"] = p_form_json(L);
  rep.result["q0"] = L.q(0).to_string();
  rep.result["selfadjoint"] = selfadjoint_test(L);
  rep.result["terms_used"] = seq.size();
}

void cmd_laurent(const RunConfig&, const CommandArgs& a, Report& rep) {
  const LaurentPoly phi = load_laurent(a, rep);
  rep.input["count"] = a.count;
  rep.result["polynomial"] = phi.to_string();
  rep.result["variables"] = phi.variables();
  rep.result["terms"] = phi.size();
  rep.result["sequence"] = rep.sequence(period_sequence(phi, a.count));
}

void cmd_hypergeom(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  if (a.params.empty()) throw DomainError("hypergeom needs --params a1,...,ar");
  std::vector<Rational> params;
  for (const auto& p : a.params) params.push_back(parse_exact(p));
  rep.input["params"] = a.params;
  const std::size_t M = cfg.M ? *cfg.M : params.size() - 1;
  const HypergeomReport h = hypergeom_kappa(params, M, cfg.precision_bits);
  auto to_json = [&](const FloatSeries& s) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
      const BigFloat err = ldexp(max(abs(s[i]), BigFloat(1L, 64)), 8 - static_cast<long>(cfg.precision_bits));
      Json e = rep.number(s[i], err);
      e["index"] = i;
      arr.push_back(e);
    }
    return arr;
  };
  rep.result["kappa"] = to_json(h.kappa);
  rep.result["kappa_inverse"] = to_json(h.kappa_inverse);
}

void cmd_gamma(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  if (!a.s) throw DomainError("gamma needs --s VALUE");
  const PairingInput pairing = cfg.pairing();
  const Rational s = parse_exact(*a.s);
  rep.input["s"] = *a.s;
  if (s.get_den() == 1) {
    if (!s.get_num().fits_slong_p()) throw DomainError("s out of range");
    const Complex g = gamma_at_integer(L, s.get_num().get_si(), pairing, cfg.precision_bits);
    rep.result["integer_case"] = true;
    rep.result["gamma_c"] = rep.number(g, BigFloat(0L, 64));
    return;
  }
  const KappaValue k = kappa_at(L, s, cfg.pipeline());
  if (!k.value.im.is_zero()) throw DomainError("gamma_prefactor needs a real kappa(s)");
  const BigFloat sf(s, cfg.precision_bits);
  const Complex g = gamma_prefactor(k.value.re, sf, pairing, L.order() - 1);
  const BigFloat scale = abs(gamma_prefactor(BigFloat(1L, cfg.precision_bits), sf, pairing, L.order() - 1));
  rep.result["integer_case"] = false;
  rep.result["kappa"] = rep.number(k.value, k.error);
  rep.result["gamma_c"] = rep.number(g, k.error * scale);
  rep.result["limit"] = rep.limit(k.diagnostics);
  flag_reliability(cfg, rep);
}

void cmd_recognize(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  if (!a.value) throw DomainError("recognize needs --value DECIMAL");
  const std::string& text = *a.value;
  std::size_t digits = 0;
  for (char ch : text.substr(0, text.find_first_of("eE")))
    if (std::isdigit(static_cast<unsigned char>(ch))) ++digits;
  const unsigned from_digits = static_cast<unsigned>(std::floor(static_cast<double>(digits) * 3.3219)) ;
  const unsigned prec = a.bits ? *a.bits : std::max(16U, from_digits > 4 ? from_digits - 4 : 16U);
  const BigFloat x = parse_number(text, std::max(prec, cfg.precision_bits));
  const std::string basis_text = a.basis.value_or("zeta2,zeta3");
  std::optional<BigFloat> c;
  if (cfg.c_override) c = parse_number(*cfg.c_override, std::max(prec, cfg.precision_bits) * 2);
  const ConstantBasis basis = ConstantBasis::from_labels(split(basis_text, ','), c);
  rep.input["value"] = text;
  rep.input["basis"] = basis.labels();
  rep.input["max_den"] = a.max_den;
  rep.input["bits"] = prec;
  const auto r = recognize_value(x, basis, a.max_den, prec);
  if (!r) {
    rep.result["recognized"] = nullptr;
    rep.result["message"] = "no confident match";
    return;
  }
  rep.result["recognized"] = r->text;
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < r->coefficients.size(); ++i)
    coeffs.push_back(Json{{"label", basis.labels()[i]}, {"value", to_wire(r->coefficients[i])}});
  rep.result["coefficients"] = coeffs;
  Json rel = Json::array();
  for (const auto& m : r->relation) rel.push_back(m.get_str());
  rep.result["relation"] = rel;
  rep.result["residual"] = decimal_err(r->residual);
  rep.result["err_est"] = decimal_err(r->residual);
}

void cmd_check(const RunConfig& cfg, const CommandArgs& a, Report& rep) {
  const Operator L = validate_mum(load_operator(a, rep));
  const PipelineConfig pc = cfg.pipeline();
  const std::size_t M = default_order(cfg, L);
  Json checks = Json::object();
  bool ok = true;

  const AlphaReport al = alpha_coeffs(L, M, pc);
  const ComplexSeries prod = series_multiply(al.kappa.kappa, al.alpha);
  BigFloat worst(0L, 64);
  for (std::size_t i = 0; i < prod.coeffs.size(); ++i) {
    const BigFloat want(i == 0 ? 1L : 0L, cfg.precision_bits);
    worst = max(worst, abs(prod[i] - Complex(want)).with_precision(64));
  }
  const BigFloat k0_dev = abs(al.kappa.kappa[0] - Complex(BigFloat(1L, cfg.precision_bits)));
  const bool k0_ok = k0_dev <= al.kappa.errors[0] + epsilon(cfg.precision_bits / 2, 64);
  checks["kappa0_is_one"] = Json{{"deviation", decimal_err(k0_dev)}, {"err_est", decimal_err(al.kappa.errors[0])}, {"pass", k0_ok}};
  const bool prod_ok = worst < epsilon(cfg.precision_bits / 2, 64);
  checks["kappa_times_alpha"] = Json{{"max_deviation", decimal_err(worst)}, {"pass", prod_ok}};
  ok = ok && k0_ok && prod_ok;
  for (const auto& d : al.kappa.limits) rep.note_diagnostics(d);

  const GrowthReport g = growth_check(L, pc);
  checks["growth"] = Json{{"plateau", rep.number(g.plateau, g.plateau_error)},
                          {"drift", decimal_err(g.drift)},
                          {"decays_like_inverse_m", g.decays_like_inverse_m}};

  std::vector<std::string> s0s = a.s0_values.empty() ? std::vector<std::string>{"1/3", "3/2"} : a.s0_values;
  Json res = Json::array();
  for (const auto& s : s0s) {
    const ResidualReport r = difference_residual(L, parse_exact(s), pc);
    const bool pass = r.residual <= r.error + epsilon(cfg.precision_bits / 2, 64);
    ok = ok && pass;
    res.push_back(Json{{"s0", s}, {"residual", decimal_err(r.residual)}, {"err_est", decimal_err(r.error)}, {"pass", pass}});
  }
  checks["difference_residual"] = res;

  const bool sa = selfadjoint_test(L);
  Json pj{{"selfadjoint", sa}};
  try {
    const PolyT p = solve_p(L);
    const bool one = p == PolyT::constant(1);
    pj["p"] = p.to_string();
    pj["pass"] = one == sa;
    ok = ok && one == sa;
  } catch (const Error& e) {
    pj["p"] = nullptr;
    pj["p_error"] = e.kind() + ": " + e.what();
  }
  checks["yukawa"] = pj;
  rep.result["checks"] = checks;
  rep.result["pass"] = ok;
  if (!ok) rep.flag("CHECK_FAILED");
  flag_reliability(cfg, rep);
}

}  // namespace kforge::cli
