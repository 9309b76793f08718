#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "orebc/error.hpp"

namespace orebc {

enum class FieldKind { rationals, prime_field };

/// The ground field k: either Q or GF(p) for a prime p.
class FieldSpec {
 public:
  static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::rationals, 0); }

  /// Throws Error(invalid_field) unless p is prime. p must be below 2^63.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == FieldKind::rationals; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  // "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

/// 0 for Q, p for GF(p).
std::uint64_t characteristic(const FieldSpec& field) noexcept;

bool is_prime(std::uint64_t n) noexcept;

/// An element of k in canonical form: lowest terms with positive denominator
/// over Q, a residue in [0, p) over GF(p).
class Scalar {
 public:
  explicit Scalar(FieldSpec field) noexcept : field_(field) {}
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpz_class& value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) noexcept { return Scalar(field); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }

  /// Accepts an optionally signed integer or `a/b`.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Rendering helper: true iff the value is a negative rational. Always false over GF(p).
  bool is_negative() const noexcept;

  const mpq_class& rational() const noexcept { return q_; }
  std::uint64_t residue() const noexcept { return r_; }

  Scalar inv() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept;

  std::string to_string() const;

 private:
  void check_field(const Scalar& b) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

enum class FieldOp { add, sub, mul, div, neg, inv };

/// Dispatcher over the field operations; `b` is required for binary ops.
Scalar field_arith(FieldOp op, const Scalar& a, const std::optional<Scalar>& b = std::nullopt);

}  // namespace orebc
