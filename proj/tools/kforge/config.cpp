#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>

#include "kforge/error.hpp"

namespace kforge::cli {

Rational parse_exact(const std::string& text) {
  static const std::regex rational_re(R"(\s*([-+]?\d+)(?:/(\d+))?\s*)");
  static const std::regex decimal_re(R"(\s*([-+]?)(\d*)(?:\.(\d*))?(?:[eE]([-+]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, rational_re)) {
    std::string num = m[1].str();
    if (num[0] == '+') num.erase(0, 1);
    if (m[2].matched) {
      if (Integer(m[2].str(), 10) == 0) throw DomainError("zero denominator in '" + text + "'");
      return parse_rational(num + "/" + m[2].str());
    }
    return parse_rational(num);
  }
  if (std::regex_match(text, m, decimal_re) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    long exp10 = -static_cast<long>(m[3].length());
    if (m[4].matched) exp10 += std::stol(m[4].str());
    if (exp10 < -100000 || exp10 > 100000) throw DomainError("exponent out of range in '" + text + "'");
    Rational q{Integer(digits, 10)};
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    q = exp10 >= 0 ? Rational(q * Rational(p)) : Rational(q / Rational(p));
    if (m[1].str() == "-") q = -q;
    return q;
  }
  throw DomainError("not a number: '" + text + "'");
}

BigFloat parse_number(const std::string& text, unsigned precision_bits) {
  return BigFloat(parse_exact(text), precision_bits);
}

void RunConfig::validate() const {
  if (precision_bits < 64) throw DomainError("precision_bits must be >= 64");
  if (depth == 0) throw DomainError("depth must be >= 1");
  if (K <= 4 * static_cast<std::size_t>(depth))
    throw DomainError("terms K must exceed 4 * depth (K = " + std::to_string(K) + ", depth = " +
                      std::to_string(depth) + ")");
  tolerance_value();
}

PipelineConfig RunConfig::pipeline() const {
  PipelineConfig p;
  p.K = K;
  p.depth = depth;
  p.precision_bits = precision_bits;
  p.half_power = half_power;
  p.arithmetic = float_arithmetic ? Arithmetic::Float : Arithmetic::Exact;
  if (c_override) p.c_override = Complex(parse_number(*c_override, precision_bits + 32));
  return p;
}

PairingInput RunConfig::pairing() const {
  if (!Q0 || !Qc) throw DomainError("this command needs both --Q0 and --Qc");
  PairingInput p{parse_exact(*Q0), parse_exact(*Qc)};
  if (p.Q0 == 0 || p.Qc == 0) throw DomainError("Q0 and Qc must be nonzero");
  return p;
}

BigFloat RunConfig::tolerance_value() const {
  const BigFloat t = parse_number(tolerance, 64);
  if (t.sign() <= 0) throw DomainError("tolerance must be positive");
  return t;
}

Json RunConfig::to_json() const {
  Json j{{"terms", K},
         {"precision_bits", precision_bits},
         {"depth", depth},
         {"half_power", half_power},
         {"arithmetic", float_arithmetic ? "float" : "exact"},
         {"tolerance", tolerance},
         {"log_branch", "principal"}};
  j["order"] = M ? Json(*M) : Json(nullptr);
  j["c"] = c_override ? Json(*c_override) : Json(nullptr);
  j["Q0"] = Q0 ? Json(*Q0) : Json(nullptr);
  j["Qc"] = Qc ? Json(*Qc) : Json(nullptr);
  return j;
}

namespace {

std::string as_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

RunConfig resolve_config(const ConfigFlags& flags) {
  RunConfig cfg;
  if (const char* env = std::getenv("KFORGE_PRECISION_BITS"); env && *env) {
    try {
      cfg.precision_bits = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw DomainError(std::string("KFORGE_PRECISION_BITS is not a number: ") + env);
    }
  }
  if (flags.config_file) {
    std::ifstream in(*flags.config_file);
    if (!in) throw DomainError("cannot open config file " + *flags.config_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception& e) {
      throw DomainError("config file is not valid JSON: " + std::string(e.what()));
    }
    try {
      for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const Json& v = it.value();
        if (key == "terms" || key == "K") {
          cfg.K = v.get<std::size_t>();
        } else if (key == "order" || key == "M") {
          cfg.M = v.get<std::size_t>();
        } else if (key == "precision_bits") {
          cfg.precision_bits = v.get<unsigned>();
        } else if (key == "depth") {
          cfg.depth = v.get<unsigned>();
        } else if (key == "c") {
          cfg.c_override = as_text(v);
        } else if (key == "Q0") {
          cfg.Q0 = as_text(v);
        } else if (key == "Qc") {
          cfg.Qc = as_text(v);
        } else if (key == "output") {
          cfg.output = v.get<std::string>();
        } else if (key == "tolerance") {
          cfg.tolerance = as_text(v);
        } else if (key == "half_power") {
          cfg.half_power = v.get<bool>();
        } else if (key == "arithmetic") {
          cfg.float_arithmetic = v.get<std::string>() == "float";
        } else {
          throw DomainError("unknown config key '" + key + "'");
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw DomainError("bad value in config file: " + std::string(e.what()));
    }
  }
  if (flags.K) cfg.K = *flags.K;
  if (flags.M) cfg.M = *flags.M;
  if (flags.precision_bits) cfg.precision_bits = *flags.precision_bits;
  if (flags.depth) cfg.depth = *flags.depth;
  if (flags.c_override) cfg.c_override = flags.c_override;
  if (flags.Q0) cfg.Q0 = flags.Q0;
  if (flags.Qc) cfg.Qc = flags.Qc;
  if (flags.output) cfg.output = flags.output;
  if (flags.tolerance) cfg.tolerance = *flags.tolerance;
  if (flags.half_power) cfg.half_power = true;
  if (flags.float_arithmetic) cfg.float_arithmetic = true;
  cfg.validate();
  return cfg;
}

}  // namespace kforge::cli
