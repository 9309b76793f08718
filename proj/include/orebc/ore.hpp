#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "orebc/bivar.hpp"
#include "orebc/degree.hpp"
#include "orebc/poly.hpp"

namespace orebc {

enum class CoeffRing { polynomials, rational_functions };

const char* to_string(CoeffRing ring) noexcept;

class OreAlgebra;
using AlgebraPtr = std::shared_ptr<const OreAlgebra>;

/// The ring S = R[x; σ, δ] with R = k[y] or k(y), σ(y) = sigma_y and δ(y) = delta_y.
/// σ fixes k pointwise and δ vanishes on k.
class OreAlgebra {
 public:
  /// Throws InvalidArgument when deg(sigma_y) < 1 (σ would not be injective).
  static AlgebraPtr create(FieldSpec field, CoeffRing ring, Poly sigma_y, Poly delta_y);

  /// σ = id, δ = d/dy.
  static AlgebraPtr weyl(FieldSpec field, CoeffRing ring = CoeffRing::polynomials);
  /// σ(y) = q·y, δ(y) = 1. Throws InvalidArgument for q = 0.
  static AlgebraPtr q_weyl(const Scalar& q, CoeffRing ring = CoeffRing::polynomials);
  /// σ(y) = p(y), δ(y) = delta_y.
  static AlgebraPtr power(Poly p, Poly delta_y, CoeffRing ring = CoeffRing::polynomials);

  const FieldSpec& field() const noexcept { return field_; }
  CoeffRing coeff_ring() const noexcept { return ring_; }
  const Poly& sigma_y() const noexcept { return sigma_y_; }
  const Poly& delta_y() const noexcept { return delta_y_; }
  bool sigma_is_identity() const noexcept { return sigma_kind_ == SigmaKind::identity; }

  Poly sigma(const Poly& r) const;
  RatFunc sigma(const RatFunc& r) const;
  Poly delta(const Poly& r) const;
  RatFunc delta(const RatFunc& r) const;
  RatFunc sigma_pow(const RatFunc& r, std::size_t n) const;
  /// σ(r) and δ(r) together; δ is derived from σ(r), so this is cheaper than two calls.
  std::pair<Poly, Poly> sigma_delta(const Poly& r) const;
  std::pair<RatFunc, RatFunc> sigma_delta(const RatFunc& r) const;

  /// Throws InvalidArgument if r is not an element of the coefficient ring.
  void check_coefficient(const RatFunc& r) const;

  // e.g. "Q[y][x; y -> 2*y, y -> 1]"
  std::string to_string() const;

  friend bool operator==(const OreAlgebra& a, const OreAlgebra& b) noexcept {
    return a.field_ == b.field_ && a.ring_ == b.ring_ && a.sigma_y_ == b.sigma_y_ && a.delta_y_ == b.delta_y_;
  }

 private:
  enum class SigmaKind { identity, monomial, general };

  OreAlgebra(FieldSpec field, CoeffRing ring, Poly sigma_y, Poly delta_y);
  Poly delta_given_sigma(const Poly& r, const Poly& sigma_r) const;

  FieldSpec field_;
  CoeffRing ring_;
  Poly sigma_y_;
  Poly delta_y_;
  Poly sigma_minus_y_;
  SigmaKind sigma_kind_;
  bool weyl_delta_;  // δ is d/dy
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept;

RatFunc apply_sigma(const OreAlgebra& algebra, const RatFunc& r);
RatFunc apply_delta(const OreAlgebra& algebra, const RatFunc& r);
/// σ(r) = r and δ(r) = 0.
bool is_constant_coeff(const OreAlgebra& algebra, const RatFunc& r);

/// P = Σ a_i x^i with left coefficients a_i ∈ R; coeffs()[i] = a_i.
class OreElem {
 public:
  explicit OreElem(AlgebraPtr algebra);
  OreElem(AlgebraPtr algebra, std::vector<RatFunc> coeffs);

  static OreElem zero(AlgebraPtr algebra) { return OreElem(std::move(algebra)); }
  static OreElem one(AlgebraPtr algebra);
  static OreElem x(AlgebraPtr algebra);
  static OreElem y(AlgebraPtr algebra);
  /// r·x^power.
  static OreElem monomial(AlgebraPtr algebra, RatFunc r, std::size_t power = 0);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<RatFunc>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  RatFunc coeff(std::size_t i) const;
  Degree degree() const noexcept {
    return is_zero() ? Degree::minus_infinity() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }
  /// Throws ZeroElement on 0.
  const RatFunc& leading() const;
  /// Largest y-degree among numerators.
  std::size_t y_degree() const noexcept;
  bool has_polynomial_coeffs() const noexcept;

  OreElem& operator+=(const OreElem& q);
  OreElem& operator-=(const OreElem& q);
  friend OreElem operator+(OreElem p, const OreElem& q) { return p += q; }
  friend OreElem operator-(OreElem p, const OreElem& q) { return p -= q; }
  friend OreElem operator*(const OreElem& p, const OreElem& q);
  OreElem operator-() const;

  friend bool operator==(const OreElem& p, const OreElem& q) noexcept;

  /// Descending x-powers, coefficients parenthesized: `(y^2 + 1)*x^3 + (2)*x + (1/2)`.
  std::string to_string() const;

 private:
  void check_algebra(const OreElem& q) const;
  void trim() noexcept;

  AlgebraPtr algebra_;
  std::vector<RatFunc> coeffs_;
};

OreElem ore_add(const OreElem& p, const OreElem& q);
OreElem ore_sub(const OreElem& p, const OreElem& q);
/// r·P with r placed on the left.
OreElem ore_scale(const RatFunc& r, const OreElem& p);
/// x·P, one application of xr = σ(r)x + δ(r) per coefficient.
OreElem times_x(const OreElem& p);
OreElem ore_mul(const OreElem& p, const OreElem& q);
OreElem commutator(const OreElem& p, const OreElem& q);
OreElem ore_pow(const OreElem& p, std::size_t e);
Degree ore_degree(const OreElem& p) noexcept;
const RatFunc& ore_leading(const OreElem& p);

/// [P, x] = 0 and [P, y] = 0.
bool is_central(const OreElem& p);

/// Σ r_ab·P^a·Q^b with each r_ab as a left coefficient. Throws NotCommuting unless PQ = QP.
OreElem eval_bivar(const BivarPoly& f, const OreElem& p, const OreElem& q);

}  // namespace orebc
