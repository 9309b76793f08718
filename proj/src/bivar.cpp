#include "orebc/bivar.hpp"

#include <algorithm>
#include <vector>

namespace orebc {

bool graded_lex_less(const BivarExponent& lhs, const BivarExponent& rhs) noexcept {
  std::size_t dl = lhs.s + lhs.t;
  std::size_t dr = rhs.s + rhs.t;
  if (dl != dr) return dl < dr;
  return lhs.s < rhs.s;
}

void BivarPoly::add_term(BivarExponent e, const Poly& c) {
  if (!(c.field() == field_)) throw Error(Errc::field_mismatch, "bivariate coefficient outside " + field_.to_string());
  if (mode_ == CoeffMode::scalars && !c.is_constant())
    throw Error(Errc::invalid_argument, "y-dependent coefficient in a scalar-coefficient polynomial");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivarExponent BivarPoly::leading_exponent() const {
  if (terms_.empty()) throw Error(Errc::zero_polynomial, "leading term of the zero polynomial");
  BivarExponent best = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    if (graded_lex_less(best, e)) best = e;
  return best;
}

std::size_t BivarPoly::degree_s() const noexcept {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.s);
  return d;
}

std::size_t BivarPoly::degree_t() const noexcept {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.t);
  return d;
}

std::size_t BivarPoly::degree_y() const noexcept {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, c.size() - 1);
  return d;
}

BivarPoly BivarPoly::with_mode(CoeffMode mode) const {
  BivarPoly out(field_, mode);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<BivarExponent, const Poly*>> ordered;
  for (const auto& [e, c] : terms_) ordered.emplace_back(e, &c);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& l, const auto& r) { return graded_lex_less(r.first, l.first); });

  std::string out;
  for (const auto& [e, c] : ordered) {
    std::string mono;
    auto append = [&mono](char v, std::size_t k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    append('s', e.s);
    append('t', e.t);

    bool negative = c->leading_coeff().is_negative();
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Poly mag = negative ? -*c : *c;

    if (mode_ == CoeffMode::poly_coeffs) {
      out += "(" + mag.to_string() + ")";
      if (!mono.empty()) out += "*" + mono;
    } else if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

BivarPoly normalize(const BivarPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "cannot normalize the zero polynomial");
  BivarPoly out(f.field(), f.mode());
  if (f.mode() == CoeffMode::scalars) {
    Scalar scale = f.terms().at(f.leading_exponent()).leading_coeff().inv();
    for (const auto& [e, c] : f.terms()) out.add_term(e, c * scale);
    return out;
  }
  Poly content(f.field());
  for (const auto& [e, c] : f.terms()) content = content.is_zero() ? c.monic() : poly_gcd(content, c);
  const Poly& lead = f.terms().at(f.leading_exponent());
  Scalar scale = poly_divrem(lead, content).first.leading_coeff().inv();
  for (const auto& [e, c] : f.terms()) out.add_term(e, poly_divrem(c, content).first * scale);
  return out;
}

}  // namespace orebc
