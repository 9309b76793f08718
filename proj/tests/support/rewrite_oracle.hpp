#pragma once

// Test-only reference implementation of Ore multiplication by term rewriting.
// It shares nothing with the library's multiplication path: polynomials are sparse maps,
// σ is applied by expanding powers of σ(y) and δ(y^k) by the twisted-Leibniz sum
// Σ_{i<k} σ(y)^i δ(y) y^{k-1-i}.

#include <map>
#include <utility>
#include <vector>

#include "orebc/ore.hpp"

namespace orebc::oracle {

using SparsePoly = std::map<std::size_t, Scalar>;              // y-power -> coefficient
using Monomial = std::pair<std::size_t, std::size_t>;          // (y-power, x-power)
using SparseElem = std::map<Monomial, Scalar>;

struct RewriteAlgebra {
  FieldSpec field;
  SparsePoly sigma_y;
  SparsePoly delta_y;
};

inline void add_into(SparsePoly& acc, std::size_t k, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(k, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

inline void add_into(SparseElem& acc, Monomial m, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

inline SparsePoly sparse(const Poly& p) {
  SparsePoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (!p.coeffs()[k].is_zero()) out.emplace(k, p.coeffs()[k]);
  return out;
}

inline RewriteAlgebra rewrite_algebra(const OreAlgebra& alg) {
  return {alg.field(), sparse(alg.sigma_y()), sparse(alg.delta_y())};
}

inline SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) add_into(out, i + j, ca * cb);
  return out;
}

inline SparsePoly power(const RewriteAlgebra& A, const SparsePoly& base, std::size_t e) {
  SparsePoly out{{0, Scalar::one(A.field)}};
  for (std::size_t i = 0; i < e; ++i) out = mul(out, base);
  return out;
}

inline SparsePoly sigma(const RewriteAlgebra& A, const SparsePoly& f) {
  SparsePoly out;
  for (const auto& [k, c] : f)
    for (const auto& [j, d] : power(A, A.sigma_y, k)) add_into(out, j, c * d);
  return out;
}

inline SparsePoly delta(const RewriteAlgebra& A, const SparsePoly& f) {
  SparsePoly out;
  for (const auto& [k, c] : f) {
    for (std::size_t i = 0; i < k; ++i) {
      SparsePoly term = mul(mul(power(A, A.sigma_y, i), A.delta_y), SparsePoly{{k - 1 - i, Scalar::one(A.field)}});
      for (const auto& [j, d] : term) add_into(out, j, c * d);
    }
  }
  return out;
}

// x^d · y^e as a sparse element, by d applications of x·(f x^k) = σ(f) x^{k+1} + δ(f) x^k.
inline SparseElem x_power_times_y_power(const RewriteAlgebra& A, std::size_t d, std::size_t e) {
  std::map<std::size_t, SparsePoly> cur{{0, SparsePoly{{e, Scalar::one(A.field)}}}};
  for (std::size_t step = 0; step < d; ++step) {
    std::map<std::size_t, SparsePoly> next;
    for (const auto& [k, f] : cur) {
      for (const auto& [j, c] : sigma(A, f)) add_into(next[k + 1], j, c);
      for (const auto& [j, c] : delta(A, f)) add_into(next[k], j, c);
    }
    cur = std::move(next);
  }
  SparseElem out;
  for (const auto& [k, f] : cur)
    for (const auto& [j, c] : f) add_into(out, {j, k}, c);
  return out;
}

inline SparseElem mul(const RewriteAlgebra& A, const SparseElem& a, const SparseElem& b) {
  SparseElem out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      // y^c x^d · y^e x^f = y^c (x^d y^e) x^f
      for (const auto& [m, c] : x_power_times_y_power(A, ma.second, mb.first))
        add_into(out, {m.first + ma.first, m.second + mb.second}, ca * cb * c);
    }
  }
  return out;
}

inline SparseElem sub(SparseElem a, const SparseElem& b) {
  for (const auto& [m, c] : b) add_into(a, m, -c);
  return a;
}

inline SparseElem to_sparse(const OreElem& e) {
  SparseElem out;
  for (std::size_t d = 0; d < e.coeffs().size(); ++d) {
    const Poly& p = e.coeffs()[d].num();
    for (std::size_t c = 0; c < p.coeffs().size(); ++c)
      if (!p.coeffs()[c].is_zero()) out.emplace(Monomial{c, d}, p.coeffs()[c]);
  }
  return out;
}

inline OreElem from_sparse(const AlgebraPtr& alg, const SparseElem& s) {
  OreElem out = OreElem::zero(alg);
  for (const auto& [m, c] : s) out += OreElem::monomial(alg, RatFunc(Poly::monomial(c, m.first)), m.second);
  return out;
}

// Rank by plain Gaussian elimination on a list of column vectors.
inline std::size_t column_rank(FieldSpec field, std::vector<std::vector<Scalar>> cols) {
  std::size_t rank = 0;
  if (cols.empty()) return 0;
  const std::size_t n_rows = cols.front().size();
  for (std::size_t r = 0; r < n_rows && rank < cols.size(); ++r) {
    std::size_t pivot = rank;
    while (pivot < cols.size() && cols[pivot][r].is_zero()) ++pivot;
    if (pivot == cols.size()) continue;
    std::swap(cols[pivot], cols[rank]);
    for (std::size_t j = rank + 1; j < cols.size(); ++j) {
      if (cols[j][r].is_zero()) continue;
      Scalar factor = cols[j][r] / cols[rank][r];
      for (std::size_t i = r; i < n_rows; ++i) cols[j][i] -= factor * cols[rank][i];
    }
    ++rank;
  }
  (void)field;
  return rank;
}

// dim_k { e : deg_x e ≤ bx, deg_y e ≤ by, ea = ae }, from the system built coefficient by
// coefficient out of the rewrite products e·a and a·e.
inline std::size_t centralizer_dimension(const OreAlgebra& alg, const OreElem& a, std::size_t bx, std::size_t by) {
  RewriteAlgebra A = rewrite_algebra(alg);
  SparseElem sa = to_sparse(a);
  std::vector<SparseElem> images;
  std::map<Monomial, std::size_t> rows;
  for (std::size_t d = 0; d <= bx; ++d) {
    for (std::size_t c = 0; c <= by; ++c) {
      SparseElem mono{{{c, d}, Scalar::one(A.field)}};
      images.push_back(sub(mul(A, mono, sa), mul(A, sa, mono)));
      for (const auto& [m, coeff] : images.back()) rows.emplace(m, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [m, i] : rows) i = next++;
  std::vector<std::vector<Scalar>> cols;
  for (const auto& img : images) {
    std::vector<Scalar> col(rows.size(), Scalar::zero(A.field));
    for (const auto& [m, coeff] : img) col[rows.at(m)] = coeff;
    cols.push_back(std::move(col));
  }
  return images.size() - column_rank(A.field, std::move(cols));
}

}  // namespace orebc::oracle
