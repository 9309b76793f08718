#include "orebc/ore.hpp"

#include <algorithm>

namespace orebc {

const char* to_string(CoeffRing ring) noexcept {
  return ring == CoeffRing::polynomials ? "poly" : "ratfunc";
}

OreAlgebra::OreAlgebra(FieldSpec field, CoeffRing ring, Poly sigma_y, Poly delta_y)
    : field_(field),
      ring_(ring),
      sigma_y_(std::move(sigma_y)),
      delta_y_(std::move(delta_y)),
      sigma_minus_y_(sigma_y_ - Poly::variable(field_)) {
  const Poly y = Poly::variable(field_);
  const auto& cs = sigma_y_.coeffs();
  if (sigma_y_ == y)
    sigma_kind_ = SigmaKind::identity;
  else if (std::all_of(cs.begin(), cs.end() - 1, [](const Scalar& c) { return c.is_zero(); }))
    sigma_kind_ = SigmaKind::monomial;
  else
    sigma_kind_ = SigmaKind::general;
  weyl_delta_ = sigma_kind_ == SigmaKind::identity && delta_y_.is_one();
}

AlgebraPtr OreAlgebra::create(FieldSpec field, CoeffRing ring, Poly sigma_y, Poly delta_y) {
  if (!(sigma_y.field() == field) || !(delta_y.field() == field))
    throw Error(Errc::field_mismatch, "sigma(y) and delta(y) must lie in " + field.to_string() + "[y]");
  if (sigma_y.degree() < Degree(1))
    throw Error(Errc::invalid_argument, "sigma(y) = " + sigma_y.to_string() + " has degree < 1; sigma is not injective");
  return AlgebraPtr(new OreAlgebra(field, ring, std::move(sigma_y), std::move(delta_y)));
}

AlgebraPtr OreAlgebra::weyl(FieldSpec field, CoeffRing ring) {
  return create(field, ring, Poly::variable(field), Poly::one(field));
}

AlgebraPtr OreAlgebra::q_weyl(const Scalar& q, CoeffRing ring) {
  if (q.is_zero()) throw Error(Errc::invalid_argument, "q-Weyl algebra needs q != 0");
  return create(q.field(), ring, Poly::monomial(q, 1), Poly::one(q.field()));
}

AlgebraPtr OreAlgebra::power(Poly p, Poly delta_y, CoeffRing ring) {
  FieldSpec field = p.field();
  return create(field, ring, std::move(p), std::move(delta_y));
}

Poly OreAlgebra::sigma(const Poly& r) const {
  switch (sigma_kind_) {
    case SigmaKind::identity:
      return r;
    case SigmaKind::monomial: {
      // r(c·y^k): coefficient i moves to y^{ik} and picks up c^i.
      if (r.is_zero()) return r;
      const std::size_t k = sigma_y_.size() - 1;
      const Scalar& c = sigma_y_.leading_coeff();
      std::vector<Scalar> out((r.size() - 1) * k + 1, Scalar::zero(field_));
      Scalar ci = Scalar::one(field_);
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r.coeffs()[i].is_zero()) out[i * k] = r.coeffs()[i] * ci;
        if (i + 1 < r.size()) ci *= c;
      }
      return Poly(field_, std::move(out));
    }
    case SigmaKind::general:
      break;
  }
  return poly_compose(r, sigma_y_);
}

RatFunc OreAlgebra::sigma(const RatFunc& r) const {
  if (r.is_polynomial()) return RatFunc(sigma(r.num()));
  // Composition with a nonconstant p keeps coprime pairs coprime.
  return RatFunc::from_coprime(sigma(r.num()), sigma(r.den()));
}

Poly OreAlgebra::delta(const Poly& r) const {
  if (r.is_constant() || delta_y_.is_zero()) return Poly(field_);
  if (sigma_kind_ == SigmaKind::identity) {
    // δ = δ(y)·d/dy
    std::vector<Scalar> out;
    out.reserve(r.size() - 1);
    for (std::size_t k = 1; k < r.size(); ++k) out.push_back(r.coeffs()[k] * Scalar(field_, static_cast<long>(k)));
    Poly derivative(field_, std::move(out));
    return weyl_delta_ ? derivative : delta_y_ * derivative;
  }
  return delta_given_sigma(r, sigma(r));
}

// On a commutative k[y], δ(y^i) = δ(y)·Σ_j σ(y)^j y^{i-1-j} = δ(y)·(σ(y)^i − y^i)/(σ(y) − y),
// so δ(r) = δ(y)·(σ(r) − r)/(σ(y) − y) whenever σ ≠ id. The division is exact.
Poly OreAlgebra::delta_given_sigma(const Poly& r, const Poly& sigma_r) const {
  if (r.is_constant() || delta_y_.is_zero()) return Poly(field_);
  if (sigma_kind_ == SigmaKind::identity) return delta(r);
  return delta_y_ * poly_divrem(sigma_r - r, sigma_minus_y_).first;
}

std::pair<Poly, Poly> OreAlgebra::sigma_delta(const Poly& r) const {
  Poly s = sigma(r);
  if (sigma_kind_ == SigmaKind::identity) return {std::move(s), delta(r)};
  Poly d = delta_given_sigma(r, s);
  return {std::move(s), std::move(d)};
}

std::pair<RatFunc, RatFunc> OreAlgebra::sigma_delta(const RatFunc& r) const {
  if (r.is_polynomial()) {
    auto [s, d] = sigma_delta(r.num());
    return {RatFunc(std::move(s)), RatFunc(std::move(d))};
  }
  return {sigma(r), delta(r)};
}

RatFunc OreAlgebra::delta(const RatFunc& r) const {
  if (r.is_polynomial()) return RatFunc(delta(r.num()));
  // From δ(u) = δ((u/v)·v) = σ(u/v)·δ(v) + δ(u/v)·v.
  RatFunc numer = RatFunc(delta(r.num())) - sigma(r) * RatFunc(delta(r.den()));
  return numer / RatFunc(r.den());
}

RatFunc OreAlgebra::sigma_pow(const RatFunc& r, std::size_t n) const {
  if (sigma_kind_ == SigmaKind::identity) return r;
  RatFunc out = r;
  for (std::size_t i = 0; i < n; ++i) out = sigma(out);
  return out;
}

void OreAlgebra::check_coefficient(const RatFunc& r) const {
  if (!(r.field() == field_)) throw Error(Errc::field_mismatch, "coefficient outside " + field_.to_string());
  if (ring_ == CoeffRing::polynomials && !r.is_polynomial())
    throw Error(Errc::invalid_argument, r.to_string() + " is not in " + field_.to_string() + "[y]");
}

std::string OreAlgebra::to_string() const {
  std::string ring = ring_ == CoeffRing::polynomials ? "[y]" : "(y)";
  return field_.to_string() + ring + "[x; y -> " + sigma_y_.to_string() + ", y -> " + delta_y_.to_string() + "]";
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

RatFunc apply_sigma(const OreAlgebra& algebra, const RatFunc& r) { return algebra.sigma(r); }

RatFunc apply_delta(const OreAlgebra& algebra, const RatFunc& r) { return algebra.delta(r); }

bool is_constant_coeff(const OreAlgebra& algebra, const RatFunc& r) {
  return algebra.sigma(r) == r && algebra.delta(r).is_zero();
}

// ---------------------------------------------------------------------------
// OreElem

OreElem::OreElem(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw Error(Errc::invalid_argument, "element without an algebra");
}

OreElem::OreElem(AlgebraPtr algebra, std::vector<RatFunc> coeffs) : OreElem(std::move(algebra)) {
  coeffs_ = std::move(coeffs);
  for (const auto& c : coeffs_) algebra_->check_coefficient(c);
  trim();
}

OreElem OreElem::one(AlgebraPtr algebra) {
  FieldSpec f = algebra->field();
  return monomial(std::move(algebra), RatFunc(Poly::one(f)), 0);
}

OreElem OreElem::x(AlgebraPtr algebra) {
  FieldSpec f = algebra->field();
  return monomial(std::move(algebra), RatFunc(Poly::one(f)), 1);
}

OreElem OreElem::y(AlgebraPtr algebra) {
  FieldSpec f = algebra->field();
  return monomial(std::move(algebra), RatFunc(Poly::variable(f)), 0);
}

OreElem OreElem::monomial(AlgebraPtr algebra, RatFunc r, std::size_t power) {
  FieldSpec f = algebra->field();
  std::vector<RatFunc> cs(power + 1, RatFunc(f));
  cs[power] = std::move(r);
  return OreElem(std::move(algebra), std::move(cs));
}

RatFunc OreElem::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : RatFunc(algebra_->field());
}

const RatFunc& OreElem::leading() const {
  if (is_zero()) throw Error(Errc::zero_element, "leading coefficient of the zero element");
  return coeffs_.back();
}

std::size_t OreElem::y_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) d = std::max(d, c.num().size() - 1);
  return d;
}

bool OreElem::has_polynomial_coeffs() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatFunc& c) { return c.is_polynomial(); });
}

void OreElem::check_algebra(const OreElem& q) const {
  if (!same_algebra(algebra_, q.algebra_))
    throw Error(Errc::algebra_mismatch, algebra_->to_string() + " vs " + q.algebra_->to_string());
}

void OreElem::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OreElem& OreElem::operator+=(const OreElem& q) {
  check_algebra(q);
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), RatFunc(algebra_->field()));
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

OreElem& OreElem::operator-=(const OreElem& q) {
  check_algebra(q);
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), RatFunc(algebra_->field()));
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

OreElem OreElem::operator-() const {
  OreElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const OreElem& p, const OreElem& q) noexcept {
  return same_algebra(p.algebra_, q.algebra_) && p.coeffs_ == q.coeffs_;
}

std::string OreElem::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k >= 1) out += "*x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

OreElem ore_add(const OreElem& p, const OreElem& q) { return p + q; }

OreElem ore_sub(const OreElem& p, const OreElem& q) { return p - q; }

OreElem ore_scale(const RatFunc& r, const OreElem& p) {
  p.algebra()->check_coefficient(r);
  std::vector<RatFunc> cs = p.coeffs();
  for (auto& c : cs) c = r * c;
  return OreElem(p.algebra(), std::move(cs));
}

OreElem times_x(const OreElem& p) {
  const OreAlgebra& alg = *p.algebra();
  if (p.is_zero()) return p;
  std::vector<RatFunc> cs(p.coeffs().size() + 1, RatFunc(alg.field()));
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const RatFunc& b = p.coeffs()[j];
    if (b.is_zero()) continue;
    auto [s, d] = alg.sigma_delta(b);
    cs[j + 1] += s;
    cs[j] += d;
  }
  return OreElem(p.algebra(), std::move(cs));
}

OreElem operator*(const OreElem& p, const OreElem& q) {
  p.check_algebra(q);
  OreElem acc(p.algebra_);
  if (p.is_zero() || q.is_zero()) return acc;
  // P·Q = Σ a_i·(x^i·Q); x^i·Q is built incrementally from x^{i-1}·Q.
  OreElem xq = q;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (i > 0) xq = times_x(xq);
    const RatFunc& a = p.coeffs_[i];
    if (a.is_zero()) continue;
    if (acc.coeffs_.size() < xq.coeffs_.size()) acc.coeffs_.resize(xq.coeffs_.size(), RatFunc(p.algebra_->field()));
    for (std::size_t k = 0; k < xq.coeffs_.size(); ++k)
      if (!xq.coeffs_[k].is_zero()) acc.coeffs_[k] += a * xq.coeffs_[k];
  }
  acc.trim();
  return acc;
}

OreElem ore_mul(const OreElem& p, const OreElem& q) { return p * q; }

OreElem commutator(const OreElem& p, const OreElem& q) { return p * q - q * p; }

OreElem ore_pow(const OreElem& p, std::size_t e) {
  OreElem result = OreElem::one(p.algebra());
  OreElem base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Degree ore_degree(const OreElem& p) noexcept { return p.degree(); }

const RatFunc& ore_leading(const OreElem& p) { return p.leading(); }

bool is_central(const OreElem& p) {
  return commutator(p, OreElem::x(p.algebra())).is_zero() && commutator(p, OreElem::y(p.algebra())).is_zero();
}

OreElem eval_bivar(const BivarPoly& f, const OreElem& p, const OreElem& q) {
  if (!same_algebra(p.algebra(), q.algebra()))
    throw Error(Errc::algebra_mismatch, "P and Q live in different algebras");
  if (!(f.field() == p.algebra()->field()))
    throw Error(Errc::field_mismatch, "f has coefficients outside " + p.algebra()->field().to_string());
  if (!commutator(p, q).is_zero()) throw Error(Errc::not_commuting, "f(P, Q) is not well defined: PQ != QP");

  std::vector<OreElem> p_pows{OreElem::one(p.algebra())};
  std::vector<OreElem> q_pows{OreElem::one(p.algebra())};
  for (std::size_t a = 1; a <= f.degree_s(); ++a) p_pows.push_back(p_pows.back() * p);
  for (std::size_t b = 1; b <= f.degree_t(); ++b) q_pows.push_back(q_pows.back() * q);

  OreElem acc = OreElem::zero(p.algebra());
  for (const auto& [e, c] : f.terms()) acc += ore_scale(RatFunc(c), p_pows[e.s] * q_pows[e.t]);
  return acc;
}

}  // namespace orebc
