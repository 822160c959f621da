#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kforge/bigfloat.hpp"
#include "kforge/numeric.hpp"
#include "kforge/sequence_types.hpp"

namespace kforge::cli {

using Json = nlohmann::ordered_json;

/// Accumulates the result body plus the worst error estimate and flags.
class Report {
 public:
  Json input = Json::object();
  Json result = Json::object();

  /// {"value", "err_est"}; the estimate also feeds the overall spread.
  Json number(const BigFloat& value, const BigFloat& err);
  /// Adds "imag" when the imaginary part is nonzero.
  Json number(const Complex& value, const BigFloat& err);
  /// Exact rational with a zero error estimate.
  Json exact(const Rational& q);
  Json sequence(const RationalSequence& seq);
  Json limit(const ExtrapolationDiagnostics& d);

  void flag(const std::string& f);
  void note_error(const BigFloat& err);
  void note_diagnostics(const ExtrapolationDiagnostics& d);

  const BigFloat& spread() const { return spread_; }
  const std::vector<std::string>& flags() const { return flags_; }

 private:
  BigFloat spread_{0L, 64};
  std::vector<std::string> flags_;
};

std::string decimal(const BigFloat& x);
std::string decimal_err(const BigFloat& x);

}  // namespace kforge::cli
