#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "orebc/ore.hpp"

namespace orebc {

/// Truncated view of C_S(a): a k-basis of the centralizer elements inside the degree
/// box, and the minimal-degree representative p_i of each residue class i mod deg(a).
struct CentralizerBasis {
  OreElem element_a;
  std::size_t degree_bound_x = 0;
  std::size_t degree_bound_y = 0;
  std::vector<OreElem> k_basis;
  std::map<std::size_t, OreElem> residue_classes;

  /// Observed rank of the truncated centralizer as a k[a]-module.
  std::size_t rank() const noexcept { return residue_classes.size(); }
};

/// (bx + deg a) · max(deg σ(y), deg δ(y), 1).
std::size_t default_y_bound(const OreElem& a, std::size_t bx);

/// k-basis of {e : deg_x e ≤ bx, deg_y e ≤ by, ea = ae}, as the kernel of e ↦ [e, a] in the
/// monomial basis y^c x^d (unknowns ordered by x-power, then y-power). Each element's
/// highest monomial is distinct, so the basis is in echelon form.
/// Throws ZeroElement for a = 0 and InvalidArgument if a has non-polynomial coefficients.
std::vector<OreElem> centralizer_kbasis(const OreElem& a, std::size_t bx, std::size_t by);

/// Residue-class representatives extracted greedily from the k-basis in ascending x-degree,
/// reducing each element by multiples α·a^q·p_i of the representatives chosen so far.
/// Throws HypothesisViolated when a reduction meets non-proportional leading coefficients.
CentralizerBasis module_basis(const OreElem& a, std::size_t bx, std::size_t by);

/// α ∈ k with u = α·v, if one exists.
std::optional<Scalar> coefficient_ratio(const RatFunc& u, const RatFunc& v);

/// True iff every pair of equal-degree elements has k-proportional leading coefficients.
/// Throws NotInCentralizer if some element does not commute with a.
bool leading_proportionality(const OreElem& a, const std::vector<OreElem>& elems);

}  // namespace orebc
