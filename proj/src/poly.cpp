#include "orebc/poly.hpp"

#include <algorithm>

namespace orebc {

Poly::Poly(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw Error(Errc::field_mismatch, "coefficient outside " + field_.to_string());
  trim();
}

Poly::Poly(const Scalar& constant) : field_(constant.field()) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Scalar& c, std::size_t power) {
  Poly out(c.field());
  if (c.is_zero()) return out;
  out.coeffs_.assign(power + 1, Scalar::zero(c.field()));
  out.coeffs_[power] = c;
  return out;
}

Poly Poly::from_ints(FieldSpec field, std::initializer_list<long> coeffs) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (long c : coeffs) cs.emplace_back(field, c);
  return Poly(field, std::move(cs));
}

Scalar Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_); }

const Scalar& Poly::leading_coeff() const {
  if (is_zero()) throw Error(Errc::zero_polynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero() || coeffs_.back().is_one()) return *this;
  return *this * coeffs_.back().inv();
}

Scalar Poly::evaluate(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

void Poly::check_field(const Poly& g) const {
  if (!(field_ == g.field_))
    throw Error(Errc::field_mismatch, "polynomials over " + field_.to_string() + " and " + g.field_.to_string());
}

void Poly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& g) {
  check_field(g);
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  check_field(g);
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (!(c.field() == field_)) throw Error(Errc::field_mismatch, "scalar outside " + field_.to_string());
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  f.check_field(g);
  Poly out(f.field_);
  if (f.is_zero() || g.is_zero()) return out;
  out.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, Scalar::zero(f.field_));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      if (g.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

Poly Poly::pow(std::size_t e) const {
  Poly result = one(field_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly out(field_);
  out.coeffs_.assign(k, Scalar::zero(field_));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = c.is_negative();
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Scalar mag = negative ? -c : c;
    std::string power;
    if (k >= 1) power = std::string(1, var) + (k > 1 ? "^" + std::to_string(k) : "");
    if (k == 0)
      out += mag.to_string();
    else if (mag.is_one())
      out += power;
    else
      out += mag.to_string() + "*" + power;
  }
  return out;
}

std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (!(f.field() == g.field())) throw Error(Errc::field_mismatch, "divrem across fields");
  const FieldSpec field = f.field();
  std::vector<Scalar> rem = f.coeffs();
  const std::size_t dg = g.size() - 1;
  if (rem.size() <= dg) return {Poly(field), f};
  std::vector<Scalar> quot(rem.size() - dg, Scalar::zero(field));
  const Scalar lc_inv = g.leading_coeff().inv();
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    Scalar c = rem[k] * lc_inv;
    quot[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= c * g.coeffs()[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = poly_divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly poly_compose(const Poly& f, const Poly& p) {
  if (!(f.field() == p.field())) throw Error(Errc::field_mismatch, "compose across fields");
  Poly acc(f.field());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * p;
    acc += Poly(*it);
  }
  return acc;
}

bool check_functional_eq(const Poly& f, const Poly& g, const Poly& p) {
  return f * poly_compose(g, p) == poly_compose(f, p) * g;
}

std::optional<Scalar> proportionality_factor(const Poly& f, const Poly& g) {
  if (f.is_zero()) return Scalar::zero(f.field());
  if (g.is_zero() || f.size() != g.size()) return std::nullopt;
  Scalar alpha = f.leading_coeff() / g.leading_coeff();
  if (f == g * alpha) return alpha;
  return std::nullopt;
}

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::sub: return f - g;
    case PolyOp::mul: return f * g;
  }
  throw Error(Errc::invalid_argument, "unknown polynomial operation");
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.field() == den_.field())) throw Error(Errc::field_mismatch, "numerator and denominator fields differ");
  if (den_.is_zero()) throw Error(Errc::division_by_zero, "rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::from_coprime(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) return RatFunc(num.field());
  Scalar lc = den.leading_coeff();
  if (!lc.is_one()) {
    Scalar inv = lc.inv();
    num *= inv;
    den *= inv;
  }
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly_divrem(num_, g).first;
      den_ = poly_divrem(den_, g).first;
    }
  }
  Scalar lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Scalar inv = lc.inv();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of the zero rational function");
  return from_coprime(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& v) {
  if (is_polynomial() && v.is_polynomial()) {
    num_ += v.num_;
    return *this;
  }
  if (den_ == v.den_) {
    num_ += v.num_;
  } else {
    num_ = num_ * v.den_ + v.num_ * den_;
    den_ = den_ * v.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& v) { return *this += -v; }

RatFunc& RatFunc::operator*=(const RatFunc& v) {
  if (is_polynomial() && v.is_polynomial()) {
    num_ = num_ * v.num_;
    return *this;
  }
  num_ = num_ * v.num_;
  den_ = den_ * v.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& v) { return *this *= v.inv(); }

RatFunc& RatFunc::operator*=(const Scalar& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = Poly::one(num_.field());
  return *this;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc ratfunc_arith(RatOp op, const RatFunc& u, const RatFunc& v) {
  switch (op) {
    case RatOp::add: return u + v;
    case RatOp::sub: return u - v;
    case RatOp::mul: return u * v;
    case RatOp::div: return u / v;
  }
  throw Error(Errc::invalid_argument, "unknown rational-function operation");
}

}  // namespace orebc
