#include "expansion.hpp"

#include <map>
#include <utility>

namespace orebc::detail {

Matrix coordinate_matrix(FieldSpec field, const std::vector<OreElem>& columns) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> rows;
  for (const auto& e : columns) {
    if (!e.has_polynomial_coeffs()) throw Error(Errc::invalid_argument, "coordinate expansion needs polynomial coefficients");
    for (std::size_t d = 0; d < e.coeffs().size(); ++d) {
      const auto& cs = e.coeffs()[d].num().coeffs();
      for (std::size_t c = 0; c < cs.size(); ++c)
        if (!cs[c].is_zero()) rows.emplace(std::make_pair(c, d), 0);
    }
  }
  std::size_t next = 0;
  for (auto& [key, index] : rows) index = next++;

  Matrix m(field, rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& e = columns[j];
    for (std::size_t d = 0; d < e.coeffs().size(); ++d) {
      const auto& cs = e.coeffs()[d].num().coeffs();
      for (std::size_t c = 0; c < cs.size(); ++c)
        if (!cs[c].is_zero()) m(rows.at({c, d}), j) = cs[c];
    }
  }
  return m;
}

}  // namespace orebc::detail
