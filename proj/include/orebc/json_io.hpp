#pragma once

#include <json.hpp>

#include "orebc/bivar.hpp"
#include "orebc/ore.hpp"

namespace orebc {

/// {"coeffs": [[y-coefficient strings per x-power]], "degree": n | null, "algebra": {...}}.
/// Rational-function algebras add "denominators" in the same layout.
nlohmann::json to_json(const OreElem& e);
nlohmann::json to_json(const OreAlgebra& algebra);
nlohmann::json to_json(const BivarPoly& f);

/// Rebuilds the element by rendering each coefficient as an expression and evaluating it
/// with the expression parser.
OreElem elem_from_json(const nlohmann::json& j, const AlgebraPtr& algebra);

}  // namespace orebc
