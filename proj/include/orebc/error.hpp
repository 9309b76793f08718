#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orebc {

enum class Errc {
  division_by_zero,
  field_mismatch,
  invalid_field,
  zero_polynomial,
  both_zero,
  algebra_mismatch,
  zero_element,
  not_commuting,
  hypothesis_violated,
  not_in_centralizer,
  not_invertible,
  invalid_argument,
  syntax_error,
  exponent_error,
  config_error,
};

// Stable identifier printed by the CLI, e.g. "NotCommuting".
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

  // Syntax-level failures map to exit code 2 in the CLI; everything else is a domain error.
  bool is_syntax() const noexcept {
    return code_ == Errc::syntax_error || code_ == Errc::exponent_error;
  }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(Errc code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace orebc
