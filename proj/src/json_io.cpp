#include "orebc/json_io.hpp"

#include "orebc/expr.hpp"

namespace orebc {

namespace {

nlohmann::json coeff_strings(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

std::string poly_expr(const nlohmann::json& coeffs) {
  std::string out = "0";
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out += " + (" + coeffs[k].get<std::string>() + ")*y^" + std::to_string(k);
  return out;
}

}  // namespace

nlohmann::json to_json(const OreAlgebra& algebra) {
  return {{"field", algebra.field().to_string()},
          {"coeff_ring", to_string(algebra.coeff_ring())},
          {"sigma", algebra.sigma_y().to_string()},
          {"delta", algebra.delta_y().to_string()}};
}

nlohmann::json to_json(const OreElem& e) {
  nlohmann::json coeffs = nlohmann::json::array();
  nlohmann::json dens = nlohmann::json::array();
  for (const auto& c : e.coeffs()) {
    coeffs.push_back(coeff_strings(c.num()));
    dens.push_back(coeff_strings(c.den()));
  }
  nlohmann::json out{{"coeffs", coeffs},
                     {"degree", e.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(e.degree().value())},
                     {"algebra", to_json(*e.algebra())}};
  if (e.algebra()->coeff_ring() == CoeffRing::rational_functions) out["denominators"] = dens;
  return out;
}

nlohmann::json to_json(const BivarPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"s", e.s}, {"t", e.t}, {"coeff", coeff_strings(c)}});
  return {{"polynomial", f.to_string()},
          {"coeff_mode", f.mode() == CoeffMode::scalars ? "scalars" : "poly"},
          {"terms", terms}};
}

OreElem elem_from_json(const nlohmann::json& j, const AlgebraPtr& algebra) {
  const auto& coeffs = j.at("coeffs");
  const nlohmann::json* dens = j.contains("denominators") ? &j.at("denominators") : nullptr;
  std::string src = "0";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string c = "(" + poly_expr(coeffs[i]) + ")";
    if (dens) c = "(" + c + "/(" + poly_expr(dens->at(i)) + "))";
    src += " + " + c + "*x^" + std::to_string(i);
  }
  return eval_expr(src, algebra);
}

}  // namespace orebc
