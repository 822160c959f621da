#include "report.hpp"

#include <algorithm>

namespace kforge::cli {

std::string decimal(const BigFloat& x) { return x.to_string(); }
std::string decimal_err(const BigFloat& x) { return x.with_precision(64).to_string(6); }

void Report::note_error(const BigFloat& err) {
  if (abs(err) > spread_) spread_ = abs(err).with_precision(64);
}

void Report::flag(const std::string& f) {
  if (std::find(flags_.begin(), flags_.end(), f) == flags_.end()) flags_.push_back(f);
}

void Report::note_diagnostics(const ExtrapolationDiagnostics& d) {
  note_error(d.spread);
  if (d.precision_warning) flag("PRECISION_WARNING");
}

Json Report::number(const BigFloat& value, const BigFloat& err) {
  note_error(err);
  return Json{{"value", decimal(value)}, {"err_est", decimal_err(err)}};
}

Json Report::number(const Complex& value, const BigFloat& err) {
  Json j = number(value.re, err);
  if (!value.im.is_zero()) j["imag"] = decimal(value.im);
  return j;
}

Json Report::exact(const Rational& q) { return Json{{"value", to_wire(q)}, {"err_est", "0"}}; }

Json Report::sequence(const RationalSequence& seq) {
  Json terms = Json::array();
  for (const auto& x : seq.terms) terms.push_back(to_wire(x));
  return Json{{"start_index", seq.start_index}, {"terms", terms}, {"err_est", "0"}};
}

Json Report::limit(const ExtrapolationDiagnostics& d) {
  note_diagnostics(d);
  return Json{{"depth", d.depth}, {"spread", decimal_err(d.spread)}, {"nodes", d.nodes},
              {"precision_warning", d.precision_warning}};
}

}  // namespace kforge::cli
