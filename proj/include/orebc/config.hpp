#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "orebc/ore.hpp"

namespace orebc {

/// Textual description of an algebra, from a `key = value` file or from CLI flags.
/// Presets: `weyl`, `qweyl` (with q), `power` (with sigma = p(y) and optional delta);
/// the argument forms `qweyl(-1)` and `power(y^2, 1)` are accepted too.
struct AlgebraConfig {
  std::string field = "Q";        // Q | GF(p) | Fp
  std::string coeff_ring = "poly";  // poly | ratfunc
  std::optional<std::string> preset;
  std::optional<std::string> q;
  std::optional<std::string> sigma;
  std::optional<std::string> delta;
};

/// Lines of `key = value`; blank lines and `#` comments are skipped. Throws ConfigError.
AlgebraConfig parse_config(std::string_view text);
AlgebraConfig load_config(const std::string& path);

FieldSpec parse_field(std::string_view text);
CoeffRing parse_coeff_ring(std::string_view text);

AlgebraPtr build_algebra(const AlgebraConfig& config);

}  // namespace orebc
