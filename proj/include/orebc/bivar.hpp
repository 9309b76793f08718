#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "orebc/poly.hpp"

namespace orebc {

enum class CoeffMode { scalars, poly_coeffs };

/// Exponent pair (a, b) of the monomial s^a t^b.
struct BivarExponent {
  std::size_t s = 0;
  std::size_t t = 0;

  friend auto operator<=>(const BivarExponent&, const BivarExponent&) = default;
};

/// True iff `lhs` precedes `rhs` in graded-lex order (total degree, then s-degree).
bool graded_lex_less(const BivarExponent& lhs, const BivarExponent& rhs) noexcept;

/// Commutative f(s, t) with coefficients in k (scalars mode) or k[y] (poly mode).
/// Scalar-mode coefficients are stored as constant polynomials. Zero coefficients are never stored.
class BivarPoly {
 public:
  BivarPoly(FieldSpec field, CoeffMode mode) noexcept : field_(field), mode_(mode) {}

  const FieldSpec& field() const noexcept { return field_; }
  CoeffMode mode() const noexcept { return mode_; }
  const std::map<BivarExponent, Poly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c·s^a·t^b. Throws InvalidArgument for a non-constant c in scalars mode.
  void add_term(BivarExponent e, const Poly& c);
  void add_term(BivarExponent e, const Scalar& c) { add_term(e, Poly(c)); }

  /// Greatest exponent in graded-lex order. Throws ZeroPolynomial on 0.
  BivarExponent leading_exponent() const;
  std::size_t degree_s() const noexcept;
  std::size_t degree_t() const noexcept;
  std::size_t degree_y() const noexcept;

  BivarPoly with_mode(CoeffMode mode) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) noexcept {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Terms in descending graded-lex order, e.g. `s^3 - t^2` or `(y^2)*t - (y^4)`.
  std::string to_string() const;

 private:
  FieldSpec field_;
  CoeffMode mode_;
  std::map<BivarExponent, Poly> terms_;
};

/// Scalars mode: leading term made monic. Poly mode: content divided out, leading
/// coefficient made monic. Throws ZeroPolynomial on 0.
BivarPoly normalize(const BivarPoly& f);

}  // namespace orebc
