#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace kforge::cli {

struct CommandArgs {
  std::optional<std::string> op_file;
  std::optional<std::string> op_text;
  std::optional<std::string> laurent_file;
  std::optional<std::string> laurent_text;
  std::optional<std::string> seq_file;
  std::size_t count = 10;
  std::optional<std::string> s;
  unsigned long ell = 1;
  long target = 2;
  std::vector<std::string> known;
  bool direct = false;
  bool dagger = false;
  std::optional<std::string> basis;
  unsigned long max_den = 1000;
  std::optional<unsigned> bits;
  std::optional<std::string> value;
  std::optional<std::string> lambda;
  std::vector<std::string> scale;
  std::vector<std::string> params;
  std::optional<unsigned> order_r;
  std::optional<unsigned> degree_d;
  std::optional<unsigned> degree_bound;
  std::vector<std::string> s0_values;
};

void cmd_parse(const RunConfig&, const CommandArgs&, Report&);
void cmd_periods(const RunConfig&, const CommandArgs&, Report&);
void cmd_frobenius(const RunConfig&, const CommandArgs&, Report&);
void cmd_kappa(const RunConfig&, const CommandArgs&, Report&);
void cmd_alpha(const RunConfig&, const CommandArgs&, Report&);
void cmd_lmhs(const RunConfig&, const CommandArgs&, Report&);
void cmd_apery(const RunConfig&, const CommandArgs&, Report&);
void cmd_extend(const RunConfig&, const CommandArgs&, Report&);
void cmd_adjoint(const RunConfig&, const CommandArgs&, Report&);
void cmd_selfcheck(const RunConfig&, const CommandArgs&, Report&);
void cmd_p_poly(const RunConfig&, const CommandArgs&, Report&);
void cmd_fit(const RunConfig&, const CommandArgs&, Report&);
void cmd_laurent(const RunConfig&, const CommandArgs&, Report&);
void cmd_hypergeom(const RunConfig&, const CommandArgs&, Report&);
void cmd_gamma(const RunConfig&, const CommandArgs&, Report&);
void cmd_recognize(const RunConfig&, const CommandArgs&, Report&);
void cmd_check(const RunConfig&, const CommandArgs&, Report&);

}  // namespace kforge::cli
