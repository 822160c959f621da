#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "kforge/error.hpp"
#include "report.hpp"

namespace {

using kforge::cli::CommandArgs;
using kforge::cli::Json;
using kforge::cli::Report;
using kforge::cli::RunConfig;
using Handler = void (*)(const RunConfig&, const CommandArgs&, Report&);

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnreliable = 3;
constexpr int kExitNumerical = 4;

int emit_error(const std::string& kind, const std::string& cls, const std::string& message, int code) {
  Json err{{"error", {{"kind", kind}, {"class", cls}, {"message", message}}}};
  std::cerr << err.dump(2) << "\n";
  return code;
}

void add_operator_input(CLI::App* sub, CommandArgs& a) {
  auto* f = sub->add_option("--op", a.op_file, "Operator file");
  auto* t = sub->add_option("--op-text", a.op_text, "Operator text");
  f->excludes(t);
}

void add_laurent_input(CLI::App* sub, CommandArgs& a) {
  auto* f = sub->add_option("--laurent", a.laurent_file, "Laurent polynomial file");
  auto* t = sub->add_option("--laurent-text", a.laurent_text, "Laurent polynomial text");
  f->excludes(t);
}

void add_recognition(CLI::App* sub, CommandArgs& a) {
  sub->add_option("--basis", a.basis, "Comma-separated recognition basis (e.g. zeta2,zeta3,log:c)");
  sub->add_option("--max-den", a.max_den, "Largest denominator for recognition");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kforge: Frobenius constants, Apery limits and LMHS periods of MUM operators"};
  app.require_subcommand(1);
  app.fallthrough();

  kforge::cli::ConfigFlags flags;
  CommandArgs args;
  app.add_option("--config", flags.config_file, "JSON config file");
  app.add_option("--precision", flags.precision_bits, "Working precision in bits");
  app.add_option("-K,--terms", flags.K, "Number of exact terms");
  app.add_option("--depth", flags.depth, "Extrapolation depth");
  app.add_option("--c", flags.c_override, "Conifold point override");
  app.add_option("--Q0", flags.Q0, "Pairing constant Q0");
  app.add_option("--Qc", flags.Qc, "Pairing constant Qc");
  app.add_option("--output", flags.output, "Write JSON here instead of stdout");
  app.add_option("--tolerance", flags.tolerance, "Spread above which the result is UNRELIABLE");
  app.add_flag("--half-power", flags.half_power, "Extrapolate in powers of k^(-1/2)");
  app.add_flag("--float", flags.float_arithmetic, "Floating recurrences instead of exact rationals");

  Handler handler = nullptr;
  auto sub = [&](const char* name, const char* desc, Handler h) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->callback([&handler, h] { handler = h; });
    return s;
  };

  namespace c = kforge::cli;
  {
    auto* s = sub("parse", "Parse and normalize an operator", c::cmd_parse);
    add_operator_input(s, args);
  }
  {
    auto* s = sub("periods", "Holomorphic period coefficients a_0..a_{count-1}", c::cmd_periods);
    add_operator_input(s, args);
    add_laurent_input(s, args);
    s->add_option("--count", args.count, "Number of terms");
  }
  {
    auto* s = sub("frobenius", "Frobenius deformation coefficients A_k(s)", c::cmd_frobenius);
    add_operator_input(s, args);
    s->add_option("--count", args.count, "Number of terms");
    s->add_option("--s", args.s, "Rational expansion point (default 0: series in s)");
    s->add_option("--order", flags.M, "Series order M");
  }
  {
    auto* s = sub("kappa", "Frobenius constants kappa_0..kappa_M", c::cmd_kappa);
    add_operator_input(s, args);
    add_recognition(s, args);
    s->add_option("--order", flags.M, "Series order M");
    s->add_flag("--dagger", args.dagger, "Use the adjoint operator");
  }
  {
    auto* s = sub("alpha", "LMHS periods alpha_0..alpha_M", c::cmd_alpha);
    add_operator_input(s, args);
    add_recognition(s, args);
    s->add_option("--order", flags.M, "Series order M");
    s->add_flag("--dagger", args.dagger, "Use the adjoint operator");
  }
  {
    auto* s = sub("lmhs", "Limiting period column and matrix", c::cmd_lmhs);
    add_operator_input(s, args);
    s->add_option("--params", args.params, "Hypergeometric parameters instead of an operator")->delimiter(',');
    s->add_option("--lambda", args.lambda, "Nilpotent rescaling, e.g. 5*log(5)");
    s->add_option("--scale", args.scale, "Entrywise factors")->delimiter(',');
  }
  {
    auto* s = sub("apery", "Apery constant kappa(ell)", c::cmd_apery);
    add_operator_input(s, args);
    add_recognition(s, args);
    s->add_option("--ell", args.ell, "Positive integer ell");
  }
  {
    auto* s = sub("extend", "kappa at larger integers from the difference equation", c::cmd_extend);
    add_operator_input(s, args);
    s->add_option("--target", args.target, "Target integer");
    s->add_option("--known", args.known, "Known values s=value")->delimiter(',');
    s->add_flag("--direct", args.direct, "Also compute the target by the limit pipeline");
  }
  {
    auto* s = sub("adjoint", "Adjoint operator", c::cmd_adjoint);
    add_operator_input(s, args);
  }
  {
    auto* s = sub("selfcheck", "Self-adjointness test against the Yukawa polynomial", c::cmd_selfcheck);
    add_operator_input(s, args);
    s->add_option("--degree-bound", args.degree_bound, "Largest degree searched for p");
  }
  {
    auto* s = sub("p-poly", "Yukawa polynomial p", c::cmd_p_poly);
    add_operator_input(s, args);
    s->add_option("--degree-bound", args.degree_bound, "Largest degree searched for p");
  }
  {
    auto* s = sub("fit", "Fit an operator to a period sequence", c::cmd_fit);
    add_laurent_input(s, args);
    s->add_option("--seq", args.seq_file, "Sequence file (JSON array or whitespace separated)");
    s->add_option("--order", args.order_r, "Operator order r")->required();
    s->add_option("--degree", args.degree_d, "Operator degree d")->required();
    s->add_option("--count", args.count, "Number of Laurent terms to generate");
  }
  {
    auto* s = sub("laurent", "Constant terms of powers of a Laurent polynomial", c::cmd_laurent);
    add_laurent_input(s, args);
    s->add_option("--count", args.count, "Number of terms");
  }
  {
    auto* s = sub("hypergeom", "Closed-form kappa for hypergeometric parameters", c::cmd_hypergeom);
    s->add_option("--params", args.params, "Parameters a_1..a_r")->delimiter(',')->required();
    s->add_option("--order", flags.M, "Series order M");
  }
  {
    auto* s = sub("gamma", "Gamma_c prefactor at s", c::cmd_gamma);
    add_operator_input(s, args);
    s->add_option("--s", args.s, "Rational s")->required();
  }
  {
    auto* s = sub("recognize", "Recognize a decimal in a constant basis", c::cmd_recognize);
    s->add_option("--value", args.value, "Decimal value")->required();
    add_recognition(s, args);
    s->add_option("--bits", args.bits, "Bits of the value to trust");
  }
  {
    auto* s = sub("check", "Consistency checks on an operator", c::cmd_check);
    add_operator_input(s, args);
    s->add_option("--order", flags.M, "Series order M");
    s->add_option("--s0", args.s0_values, "Non-integer points for the difference residual")->delimiter(',');
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("UsageError", "input", e.what(), kExitInput);
  }

  Report rep;
  RunConfig cfg;
  try {
    cfg = kforge::cli::resolve_config(flags);
    cfg.validate();
    handler(cfg, args, rep);
  } catch (const kforge::Error& e) {
    const bool input = e.error_class() == kforge::ErrorClass::Input;
    return emit_error(e.kind(), input ? "input" : "numerical", e.what(), input ? kExitInput : kExitNumerical);
  } catch (const std::invalid_argument& e) {
    return emit_error("InvalidArgument", "input", e.what(), kExitInput);
  } catch (const std::out_of_range& e) {
    return emit_error("OutOfRange", "input", e.what(), kExitInput);
  } catch (const std::exception& e) {
    return emit_error("InternalError", "numerical", e.what(), kExitNumerical);
  }

  const bool unreliable = rep.spread() > cfg.tolerance_value();
  if (unreliable) rep.flag("UNRELIABLE");

  Json diagnostics{{"K", cfg.K},
                   {"precision_bits", cfg.precision_bits},
                   {"depth", cfg.depth},
                   {"spread", kforge::cli::decimal_err(rep.spread())},
                   {"flags", rep.flags()}};
  Json doc{{"input", rep.input}, {"config", cfg.to_json()}, {"result", rep.result}, {"diagnostics", diagnostics}};
  const std::string text = doc.dump(2) + "\n";
  if (cfg.output) {
    std::ofstream out(*cfg.output);
    if (!out) return emit_error("IOError", "input", "cannot write " + *cfg.output, kExitInput);
    out << text;
  } else {
    std::cout << text;
  }
  return unreliable ? kExitUnreliable : kExitOk;
}
