#include "orebc/centralizer.hpp"

#include <algorithm>

#include "expansion.hpp"
#include "orebc/linalg.hpp"

namespace orebc {

namespace {

std::size_t finite(Degree d) { return d.is_finite() ? static_cast<std::size_t>(d.value()) : 0; }

// Right multiplication by x^d only shifts coefficient indices.
OreElem times_x_power_right(const OreElem& e, std::size_t d) {
  if (e.is_zero() || d == 0) return e;
  std::vector<RatFunc> cs(d, RatFunc(e.algebra()->field()));
  cs.insert(cs.end(), e.coeffs().begin(), e.coeffs().end());
  return OreElem(e.algebra(), std::move(cs));
}

}  // namespace

std::size_t default_y_bound(const OreElem& a, std::size_t bx) {
  const OreAlgebra& alg = *a.algebra();
  std::size_t growth = std::max<std::size_t>({finite(alg.sigma_y().degree()), finite(alg.delta_y().degree()), 1});
  return (bx + finite(a.degree())) * growth;
}

std::vector<OreElem> centralizer_kbasis(const OreElem& a, std::size_t bx, std::size_t by) {
  if (a.is_zero()) throw Error(Errc::zero_element, "centralizer of 0 is the whole ring");
  if (!a.has_polynomial_coeffs())
    throw Error(Errc::invalid_argument, "centralizer search needs an element with polynomial coefficients");
  const AlgebraPtr& alg = a.algebra();
  const FieldSpec field = alg->field();

  // Unknown (d, c) is the coefficient of y^c x^d, at index d·(by+1) + c.
  std::vector<OreElem> x_pow_a;  // x^d · a
  std::vector<OreElem> a_y_pow;  // a · y^c
  x_pow_a.push_back(a);
  for (std::size_t d = 1; d <= bx; ++d) x_pow_a.push_back(times_x(x_pow_a.back()));
  a_y_pow.push_back(a);
  const OreElem y = OreElem::y(alg);
  for (std::size_t c = 1; c <= by; ++c) a_y_pow.push_back(a_y_pow.back() * y);

  std::vector<OreElem> images;
  images.reserve((bx + 1) * (by + 1));
  for (std::size_t d = 0; d <= bx; ++d) {
    for (std::size_t c = 0; c <= by; ++c) {
      RatFunc yc(Poly::monomial(Scalar::one(field), c));
      images.push_back(ore_scale(yc, x_pow_a[d]) - times_x_power_right(a_y_pow[c], d));
    }
  }

  Matrix m = detail::coordinate_matrix(field, images);
  std::vector<OreElem> basis;
  for (const auto& v : kernel_basis(m)) {
    std::vector<RatFunc> cs(bx + 1, RatFunc(field));
    for (std::size_t d = 0; d <= bx; ++d) {
      std::vector<Scalar> ycoeffs(v.begin() + static_cast<std::ptrdiff_t>(d * (by + 1)),
                                  v.begin() + static_cast<std::ptrdiff_t>((d + 1) * (by + 1)));
      cs[d] = RatFunc(Poly(field, std::move(ycoeffs)));
    }
    basis.emplace_back(alg, std::move(cs));
  }
  return basis;
}

std::optional<Scalar> coefficient_ratio(const RatFunc& u, const RatFunc& v) {
  if (v.is_zero()) return u.is_zero() ? std::optional<Scalar>(Scalar::zero(u.field())) : std::nullopt;
  if (u.den() != v.den()) return std::nullopt;
  return proportionality_factor(u.num(), v.num());
}

CentralizerBasis module_basis(const OreElem& a, std::size_t bx, std::size_t by) {
  if (a.is_zero()) throw Error(Errc::zero_element, "module basis of the centralizer of 0");
  if (a.degree() < Degree(1)) throw Error(Errc::invalid_argument, "module basis needs deg(a) >= 1");
  const std::size_t n = static_cast<std::size_t>(a.degree().value());

  CentralizerBasis out{a, bx, by, centralizer_kbasis(a, bx, by), {}};
  out.residue_classes.emplace(0, OreElem::one(a.algebra()));

  std::vector<OreElem> a_pows{OreElem::one(a.algebra())};
  auto a_pow = [&](std::size_t q) -> const OreElem& {
    while (a_pows.size() <= q) a_pows.push_back(a_pows.back() * a);
    return a_pows[q];
  };

  std::vector<const OreElem*> ordered;
  for (const auto& e : out.k_basis) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const OreElem* l, const OreElem* r) { return l->degree() < r->degree(); });

  for (const OreElem* source : ordered) {
    OreElem e = *source;
    while (!e.is_zero()) {
      const auto j = static_cast<std::size_t>(e.degree().value());
      auto rep = out.residue_classes.find(j % n);
      if (rep == out.residue_classes.end() || rep->second.degree() > e.degree()) break;
      const auto m = static_cast<std::size_t>(rep->second.degree().value());
      OreElem multiple = a_pow((j - m) / n) * rep->second;
      auto alpha = coefficient_ratio(e.leading(), multiple.leading());
      if (!alpha)
        throw Error(Errc::hypothesis_violated, "leading coefficients " + e.leading().to_string() + " and " +
                                                   multiple.leading().to_string() + " are not proportional over k");
      e -= ore_scale(RatFunc(Poly(*alpha)), multiple);
    }
    if (!e.is_zero()) {
      // Either a new class or a lower-degree element of a class whose representative came
      // from outside the search box; keep the minimal one.
      const auto j = static_cast<std::size_t>(e.degree().value());
      out.residue_classes.insert_or_assign(j % n, std::move(e));
    }
  }
  return out;
}

bool leading_proportionality(const OreElem& a, const std::vector<OreElem>& elems) {
  for (const auto& e : elems)
    if (!commutator(e, a).is_zero()) throw Error(Errc::not_in_centralizer, e.to_string() + " does not commute with a");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[j].is_zero() || elems[i].degree() != elems[j].degree()) continue;
      if (!coefficient_ratio(elems[i].leading(), elems[j].leading())) return false;
    }
  }
  return true;
}

}  // namespace orebc
