#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace orebc {

/// A degree in Z ∪ {−∞}. −∞ is ordered below every integer and absorbs under addition.
class Degree {
 public:
  constexpr Degree() noexcept = default;  // −∞
  constexpr explicit Degree(std::int64_t value) noexcept : value_(value) {}

  static constexpr Degree minus_infinity() noexcept { return Degree(); }

  constexpr bool is_finite() const noexcept { return value_ != kNegInf; }
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (!a.is_finite() || !b.is_finite()) return Degree();
    return Degree(a.value_ + b.value_);
  }

  friend constexpr auto operator<=>(Degree, Degree) noexcept = default;
  friend constexpr bool operator==(Degree, Degree) noexcept = default;
  friend constexpr bool operator==(Degree a, std::int64_t b) noexcept { return a.value_ == b && a.is_finite(); }

  std::string to_string() const { return is_finite() ? std::to_string(value_) : "-inf"; }

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  std::int64_t value_ = kNegInf;
};

}  // namespace orebc
