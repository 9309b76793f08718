#include "orebc/error.hpp"

namespace orebc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::invalid_field: return "InvalidField";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::both_zero: return "BothZero";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::zero_element: return "ZeroElement";
    case Errc::not_commuting: return "NotCommuting";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::not_in_centralizer: return "NotInCentralizer";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::exponent_error: return "ExponentError";
    case Errc::config_error: return "ConfigError";
  }
  return "Error";
}

}  // namespace orebc
