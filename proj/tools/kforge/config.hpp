#pragma once

#include <optional>
#include <string>

#include "kforge/invariants.hpp"
#include "report.hpp"

namespace kforge::cli {

/// Shared run settings. Precedence: flag, then --config file, then the
/// KFORGE_PRECISION_BITS environment variable, then built-in defaults.
struct RunConfig {
  std::size_t K = 2000;
  std::optional<std::size_t> M;
  unsigned precision_bits = kDefaultPrecisionBits;
  unsigned depth = 12;
  std::optional<std::string> c_override;
  std::optional<std::string> Q0;
  std::optional<std::string> Qc;
  std::optional<std::string> output;
  bool half_power = false;
  bool float_arithmetic = false;
  std::string tolerance = "1e-20";

  void validate() const;
  PipelineConfig pipeline() const;
  PairingInput pairing() const;
  BigFloat tolerance_value() const;
  Json to_json() const;
};

/// Raw flag values; unset ones fall back to the config file.
struct ConfigFlags {
  std::optional<std::size_t> K;
  std::optional<std::size_t> M;
  std::optional<unsigned> precision_bits;
  std::optional<unsigned> depth;
  std::optional<std::string> c_override;
  std::optional<std::string> Q0;
  std::optional<std::string> Qc;
  std::optional<std::string> output;
  std::optional<std::string> tolerance;
  bool half_power = false;
  bool float_arithmetic = false;
  std::optional<std::string> config_file;
};

RunConfig resolve_config(const ConfigFlags& flags);

/// "3/10", "-2", "0.3", "1.5e-2" as an exact rational.
Rational parse_exact(const std::string& text);
/// Rational text exactly, decimal text at the given precision.
BigFloat parse_number(const std::string& text, unsigned precision_bits);

}  // namespace kforge::cli
