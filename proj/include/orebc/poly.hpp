#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orebc/degree.hpp"
#include "orebc/scalar.hpp"

namespace orebc {

/// Dense univariate polynomial in k[y]; coeffs()[i] multiplies y^i.
/// The zero polynomial has no coefficients and trailing zeros are never stored.
class Poly {
 public:
  explicit Poly(FieldSpec field) noexcept : field_(field) {}
  Poly(FieldSpec field, std::vector<Scalar> coeffs);
  explicit Poly(const Scalar& constant);

  static Poly monomial(const Scalar& c, std::size_t power);
  static Poly variable(FieldSpec field) { return monomial(Scalar::one(field), 1); }
  static Poly one(FieldSpec field) { return Poly(Scalar::one(field)); }
  /// Small-integer convenience for tests and presets: from_ints(Q, {1, 0, 3}) = 3y^2 + 1.
  static Poly from_ints(FieldSpec field, std::initializer_list<long> coeffs);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Coefficient of y^i; zero past the end.
  Scalar coeff(std::size_t i) const;
  Degree degree() const noexcept {
    return is_zero() ? Degree::minus_infinity() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }
  /// Throws Error(zero_polynomial) on 0.
  const Scalar& leading_coeff() const;

  Poly monic() const;
  Scalar evaluate(const Scalar& at) const;

  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const Scalar& c) { return f *= c; }
  friend Poly operator*(const Scalar& c, Poly f) { return f *= c; }
  Poly operator-() const;

  Poly pow(std::size_t e) const;
  /// Multiply by y^k.
  Poly shifted(std::size_t k) const;

  friend bool operator==(const Poly& f, const Poly& g) noexcept {
    return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
  }

  /// e.g. `3/2*y^2 - y + 1`; "0" for the zero polynomial.
  std::string to_string(char var = 'y') const;

 private:
  void check_field(const Poly& g) const;
  void trim() noexcept;

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder with f = q*g + r, deg r < deg g. Throws DivisionByZero for g = 0.
std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g);

/// Monic gcd. Throws Error(both_zero) if f = g = 0.
Poly poly_gcd(const Poly& f, const Poly& g);

/// f(p(y)).
Poly poly_compose(const Poly& f, const Poly& p);

/// True iff f·(g∘p) = (f∘p)·g.
bool check_functional_eq(const Poly& f, const Poly& g, const Poly& p);

/// Returns α with f = α·g when one exists in k (g nonzero or both zero).
std::optional<Scalar> proportionality_factor(const Poly& f, const Poly& g);

enum class PolyOp { add, sub, mul };
Poly poly_arith(PolyOp op, const Poly& f, const Poly& g);

/// Element of k(y) in canonical form: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  explicit RatFunc(FieldSpec field) : num_(field), den_(Poly::one(field)) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor): k[y] embeds in k(y)
  /// Throws DivisionByZero when den = 0.
  RatFunc(Poly num, Poly den);
  /// Skips the gcd; the caller guarantees gcd(num, den) = 1. Only the leading coefficient is normalized.
  static RatFunc from_coprime(Poly num, Poly den);

  const FieldSpec& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  RatFunc inv() const;

  RatFunc& operator+=(const RatFunc& v);
  RatFunc& operator-=(const RatFunc& v);
  RatFunc& operator*=(const RatFunc& v);
  RatFunc& operator/=(const RatFunc& v);
  friend RatFunc operator+(RatFunc u, const RatFunc& v) { return u += v; }
  friend RatFunc operator-(RatFunc u, const RatFunc& v) { return u -= v; }
  friend RatFunc operator*(RatFunc u, const RatFunc& v) { return u *= v; }
  friend RatFunc operator/(RatFunc u, const RatFunc& v) { return u /= v; }
  RatFunc operator-() const;
  RatFunc& operator*=(const Scalar& c);

  friend bool operator==(const RatFunc& u, const RatFunc& v) noexcept {
    return u.num_ == v.num_ && u.den_ == v.den_;
  }

  /// `num` when den = 1, otherwise `(num)/(den)`.
  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Poly num_;
  Poly den_;
};

enum class RatOp { add, sub, mul, div };
RatFunc ratfunc_arith(RatOp op, const RatFunc& u, const RatFunc& v);

}  // namespace orebc
