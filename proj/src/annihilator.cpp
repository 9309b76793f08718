#include "orebc/annihilator.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "expansion.hpp"
#include "orebc/linalg.hpp"

namespace orebc {

namespace {

void check_pair(const OreElem& p, const OreElem& q) {
  if (!same_algebra(p.algebra(), q.algebra())) throw Error(Errc::algebra_mismatch, "P and Q live in different algebras");
  if (p.is_zero() || q.is_zero()) throw Error(Errc::zero_element, "annihilator search needs nonzero P and Q");
  if (!commutator(p, q).is_zero()) throw Error(Errc::not_commuting, "P and Q do not commute");
}

Poly lcm(const Poly& f, const Poly& g) { return poly_divrem(f * g, poly_gcd(f, g)).first.monic(); }

}  // namespace

std::optional<BivarPoly> annihilate(const OreElem& p, const OreElem& q, CoeffMode mode, SearchBounds bounds) {
  check_pair(p, q);
  const AlgebraPtr& alg = p.algebra();
  const FieldSpec field = alg->field();
  if (mode == CoeffMode::scalars) bounds.max_y = 0;

  std::vector<OreElem> q_pows{OreElem::one(alg)};
  for (std::size_t b = 1; b <= bounds.max_t; ++b) q_pows.push_back(q_pows.back() * q);
  std::vector<OreElem> products;  // P^a·Q^b at index a·(max_t+1) + b
  OreElem p_pow = OreElem::one(alg);
  for (std::size_t a = 0; a <= bounds.max_s; ++a) {
    if (a > 0) p_pow = p_pow * p;
    for (std::size_t b = 0; b <= bounds.max_t; ++b) products.push_back(p_pow * q_pows[b]);
  }

  // A common left factor L turns every coefficient into a polynomial without changing
  // linear relations among the columns, since e ↦ L·e is injective.
  Poly common = Poly::one(field);
  for (const auto& e : products)
    for (const auto& c : e.coeffs())
      if (!c.is_polynomial()) common = lcm(common, c.den());
  if (!common.is_one()) {
    RatFunc l(common);
    for (auto& e : products) e = ore_scale(l, e);
  }

  std::vector<OreElem> columns;
  columns.reserve((bounds.max_y + 1) * products.size());
  for (std::size_t c = 0; c <= bounds.max_y; ++c) {
    RatFunc yc(Poly::monomial(Scalar::one(field), c));
    for (const auto& e : products) columns.push_back(c == 0 ? e : ore_scale(yc, e));
  }

  auto kernel = kernel_basis(detail::coordinate_matrix(field, columns));
  if (kernel.empty()) return std::nullopt;

  const std::vector<Scalar>& v = kernel.front();
  const std::size_t per_c = products.size();
  BivarPoly f(field, mode);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    std::size_t c = idx / per_c;
    std::size_t ab = idx % per_c;
    f.add_term({ab / (bounds.max_t + 1), ab % (bounds.max_t + 1)}, Poly::monomial(v[idx], c));
  }
  f = normalize(f);
  if (!eval_bivar(f, p, q).is_zero())
    throw std::logic_error("annihilator kernel vector failed verification: " + f.to_string());
  return f;
}

std::size_t annihilator_cap() {
  if (const char* env = std::getenv("OREBC_MAX_CAP")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(Errc::config_error, std::string("OREBC_MAX_CAP must be a positive integer, got '") + env + "'");
  }
  return 16;
}

ScheduledSearch annihilate_scheduled(const OreElem& p, const OreElem& q, CoeffMode mode, std::size_t cap) {
  check_pair(p, q);
  auto deg = [](const OreElem& e) { return static_cast<std::size_t>(std::max<std::int64_t>(e.degree().value(), 1)); };
  SearchBounds b{std::min(deg(q), cap), std::min(deg(p), cap), 0};

  ScheduledSearch out;
  while (true) {
    out.visited.push_back(b);
    if (auto f = annihilate(p, q, mode, b)) {
      out.result = std::move(f);
      return out;
    }
    bool y_done = mode == CoeffMode::scalars || b.max_y >= cap;
    if (b.max_s >= cap && b.max_t >= cap && y_done) return out;
    b.max_s = std::min(2 * b.max_s, cap);
    b.max_t = std::min(2 * b.max_t, cap);
    if (mode == CoeffMode::poly_coeffs) b.max_y = std::min(std::max<std::size_t>(1, 2 * b.max_y), cap);
  }
}

bool verify(const BivarPoly& f, const OreElem& p, const OreElem& q) { return eval_bivar(f, p, q).is_zero(); }

}  // namespace orebc
