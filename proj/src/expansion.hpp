#pragma once

#include <vector>

#include "orebc/linalg.hpp"
#include "orebc/ore.hpp"

namespace orebc::detail {

/// Column j holds the coordinates of columns[j] in the k-basis {y^c x^d}; rows are
/// the monomials that occur anywhere, ordered by (y-power, x-power).
/// All coefficients must be polynomials.
Matrix coordinate_matrix(FieldSpec field, const std::vector<OreElem>& columns);

}  // namespace orebc::detail
