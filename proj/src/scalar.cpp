#include "orebc/scalar.hpp"


namespace orebc {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 63) || !is_prime(p))
    throw Error(Errc::invalid_field, "modulus " + std::to_string(p) + " is not a supported prime");
  return FieldSpec(FieldKind::prime_field, p);
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

std::uint64_t characteristic(const FieldSpec& field) noexcept { return field.modulus(); }

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
  } else {
    auto m = static_cast<long>(field_.modulus());
    long r = value % m;
    r_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
}

Scalar::Scalar(FieldSpec field, const mpz_class& value) : field_(field) {
  if (field_.is_rationals())
    q_ = value;
  else
    r_ = reduce(value, field_.modulus());
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  std::uint64_t den = reduce(value.get_den(), field_.modulus());
  if (den == 0) throw Error(Errc::division_by_zero, "denominator vanishes in " + field_.to_string());
  std::uint64_t num = reduce(value.get_num(), field_.modulus());
  r_ = mul_mod(num, pow_mod(den, field_.modulus() - 2, field_.modulus()), field_.modulus());
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw SyntaxError(Errc::syntax_error, 0, "malformed scalar '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d{std::string(den[0] == '+' ? den.substr(1) : den)};
  if (d == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  mpq_class value(mpz_class(n), d);
  value.canonicalize();
  return Scalar(field, value);
}

bool Scalar::is_zero() const noexcept { return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

bool Scalar::is_negative() const noexcept { return field_.is_rationals() && sgn(q_) < 0; }

void Scalar::check_field(const Scalar& b) const {
  if (!(field_ == b.field_))
    throw Error(Errc::field_mismatch, "operands live in " + field_.to_string() + " and " + b.field_.to_string());
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  Scalar out(field_);
  if (field_.is_rationals())
    out.q_ = 1 / q_;
  else
    out.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  return out;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  check_field(b);
  if (field_.is_rationals()) {
    q_ += b.q_;
  } else {
    std::uint64_t p = field_.modulus();
    r_ = r_ >= p - b.r_ ? r_ - (p - b.r_) : r_ + b.r_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  check_field(b);
  if (field_.is_rationals())
    q_ -= b.q_;
  else
    r_ = r_ >= b.r_ ? r_ - b.r_ : r_ + (field_.modulus() - b.r_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  check_field(b);
  if (field_.is_rationals())
    q_ *= b.q_;
  else
    r_ = mul_mod(r_, b.r_, field_.modulus());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  check_field(b);
  return *this *= b.inv();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rationals())
    out.q_ = -q_;
  else
    out.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return out;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) noexcept {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

Scalar field_arith(FieldOp op, const Scalar& a, const std::optional<Scalar>& b) {
  auto rhs = [&]() -> const Scalar& {
    if (!b) throw Error(Errc::invalid_argument, "binary field operation needs two operands");
    return *b;
  };
  switch (op) {
    case FieldOp::add: return a + rhs();
    case FieldOp::sub: return a - rhs();
    case FieldOp::mul: return a * rhs();
    case FieldOp::div: return a / rhs();
    case FieldOp::neg: return -a;
    case FieldOp::inv: return a.inv();
  }
  throw Error(Errc::invalid_argument, "unknown field operation");
}

}  // namespace orebc
