#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orebc/bivar.hpp"
#include "orebc/ore.hpp"

namespace orebc {

/// Syntax tree for the expression grammar
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('-' | '+') unary | factor
///   factor := atom ('^' natural)?
///   atom   := 'x' | 'y' | 's' | 't' | integer | '(' expr ')'
///
/// Juxtaposition is rejected and products are never reordered. `a/b` requires b to be
/// a unit of the coefficient ring, so `3/2` is a scalar literal in practice.
struct Expr {
  enum class Kind { number, variable, negate, add, sub, mul, div, power };

  Kind kind = Kind::number;
  std::string literal;    // number
  char variable = 0;      // variable
  std::size_t exponent = 0;  // power
  std::size_t position = 0;
  std::vector<Expr> children;
};

/// Throws SyntaxError, or ExponentError for exponents that are not natural literals.
Expr parse_expr(std::string_view src);

/// Evaluates in S with noncommutative products. `s` and `t` are rejected.
OreElem eval_expr(const Expr& e, const AlgebraPtr& algebra);
OreElem eval_expr(std::string_view src, const AlgebraPtr& algebra);

/// Evaluates a commutative polynomial in s, t (and y) over k. `x` is rejected.
/// The mode is poly_coeffs when y occurs with nonzero coefficient, scalars otherwise.
BivarPoly eval_bivar_expr(const Expr& e, FieldSpec field);
BivarPoly eval_bivar_expr(std::string_view src, FieldSpec field);

/// Evaluates a polynomial in y alone, e.g. σ(y) and δ(y) in a configuration.
Poly eval_poly_expr(std::string_view src, FieldSpec field);

}  // namespace orebc
