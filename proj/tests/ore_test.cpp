#include "orebc/ore.hpp"

#include <gtest/gtest.h>

#include "orebc/expr.hpp"
#include "support/generators.hpp"
#include "support/rewrite_oracle.hpp"

namespace orebc {
namespace {

const FieldSpec Q = FieldSpec::rationals();

RatFunc R(std::initializer_list<long> c) { return RatFunc(Poly::from_ints(Q, c)); }

class OreTest : public ::testing::Test {
 protected:
  AlgebraPtr weyl = OreAlgebra::weyl(Q);
  AlgebraPtr qweyl3 = OreAlgebra::q_weyl(Scalar(Q, 3L));
  AlgebraPtr qweyl_m1 = OreAlgebra::q_weyl(Scalar(Q, -1L));
  AlgebraPtr square = OreAlgebra::power(Poly::from_ints(Q, {0, 0, 1}), Poly::one(Q));

  OreElem x(const AlgebraPtr& a) { return OreElem::x(a); }
  OreElem y(const AlgebraPtr& a) { return OreElem::y(a); }
};

TEST_F(OreTest, RejectsNonInjectiveSigma) {
  EXPECT_THROW(OreAlgebra::create(Q, CoeffRing::polynomials, Poly::from_ints(Q, {2}), Poly::one(Q)), Error);
  EXPECT_THROW(OreAlgebra::q_weyl(Scalar::zero(Q)), Error);
}

TEST_F(OreTest, ApplySigma) {
  EXPECT_EQ(apply_sigma(*qweyl3, R({0, 0, 1})), R({0, 0, 9}));
  EXPECT_EQ(apply_sigma(*square, R({1, 1})), R({1, 0, 1}));
  EXPECT_EQ(apply_sigma(*square, R({7})), R({7}));
  EXPECT_EQ(apply_sigma(*qweyl3, R({7})), R({7}));
}

TEST_F(OreTest, ApplyDelta) {
  EXPECT_EQ(apply_delta(*weyl, R({0, 0, 1})), R({0, 2}));
  EXPECT_EQ(apply_delta(*qweyl3, R({0, 0, 1})), R({0, 4}));  // (q + 1) y
  EXPECT_TRUE(apply_delta(*weyl, R({1})).is_zero());
  EXPECT_TRUE(apply_delta(*square, R({1})).is_zero());

  AlgebraPtr weyl_rat = OreAlgebra::weyl(Q, CoeffRing::rational_functions);
  RatFunc inv_y(Poly::one(Q), Poly::variable(Q));
  EXPECT_EQ(apply_delta(*weyl_rat, inv_y), RatFunc(Poly::from_ints(Q, {-1}), Poly::from_ints(Q, {0, 0, 1})));
}

TEST_F(OreTest, DeltaMatchesTwistedLeibnizSum) {
  testing::Rng rng(23);
  for (const auto& [name, alg] : testing::standard_presets()) {
    auto A = oracle::rewrite_algebra(*alg);
    for (int i = 0; i < 30; ++i) {
      Poly f = testing::random_poly(rng, Q, 6);
      oracle::SparsePoly expected = oracle::delta(A, oracle::sparse(f));
      EXPECT_EQ(oracle::sparse(alg->delta(f)), expected) << name;
      EXPECT_EQ(oracle::sparse(alg->sigma(f)), oracle::sigma(A, oracle::sparse(f))) << name;
    }
  }
}

TEST_F(OreTest, MultiplicationExamples) {
  EXPECT_EQ(ore_mul(x(weyl), y(weyl)), y(weyl) * x(weyl) + OreElem::one(weyl));
  EXPECT_EQ(x(qweyl3) * y(qweyl3), ore_scale(R({3}), y(qweyl3) * x(qweyl3)) + OreElem::one(qweyl3));
  // x(yx + 1) = (yx + 1)x + x
  EXPECT_EQ(ore_pow(x(weyl), 2) * y(weyl), y(weyl) * ore_pow(x(weyl), 2) + ore_scale(R({2}), x(weyl)));
}

TEST_F(OreTest, ModuleOperations) {
  OreElem p = y(weyl) * x(weyl) + OreElem::one(weyl);
  EXPECT_EQ(ore_add(p, OreElem::zero(weyl)), p);
  EXPECT_TRUE(ore_sub(p, p).is_zero());
  EXPECT_EQ(ore_scale(R({0, 1}), x(weyl)).coeffs(), (std::vector<RatFunc>{R({}), R({0, 1})}));
  try {
    (void)(x(weyl) + x(qweyl3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::algebra_mismatch);
  }
}

TEST_F(OreTest, Commutators) {
  EXPECT_EQ(commutator(x(weyl), y(weyl)), OreElem::one(weyl));
  EXPECT_TRUE(commutator(ore_pow(x(qweyl_m1), 2), ore_pow(y(qweyl_m1), 2)).is_zero());
  OreElem p = y(square) * ore_pow(x(square), 2) + x(square);
  EXPECT_TRUE(commutator(p, p).is_zero());
}

TEST_F(OreTest, DegreeAndLeading) {
  OreElem p = y(weyl) * ore_pow(x(weyl), 3) + x(weyl);
  EXPECT_EQ(ore_degree(p), Degree(3));
  EXPECT_EQ(ore_leading(p), R({0, 1}));
  EXPECT_FALSE(ore_degree(OreElem::zero(weyl)).is_finite());
  try {
    ore_leading(OreElem::zero(weyl));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_element);
  }
}

TEST_F(OreTest, Powers) {
  EXPECT_EQ(ore_pow(y(weyl) + x(weyl), 0), OreElem::one(weyl));
  OreElem yx = y(weyl) * x(weyl);
  // yx·yx = y(yx + 1)x
  EXPECT_EQ(ore_pow(yx, 2), ore_scale(R({0, 0, 1}), ore_pow(x(weyl), 2)) + yx);
}

TEST_F(OreTest, Rendering) {
  OreElem e = eval_expr("(y^2 + 1)*x^3 + 2*x + 1/2", weyl);
  EXPECT_EQ(e.to_string(), "(y^2 + 1)*x^3 + (2)*x + (1/2)");
  EXPECT_EQ(OreElem::zero(weyl).to_string(), "0");
  EXPECT_EQ((x(qweyl3) * y(qweyl3)).to_string(), "(3*y)*x + (1)");
}

TEST_F(OreTest, ProductsAgreeWithRewriteOracle) {
  testing::Rng rng(29);
  for (const auto& [name, alg] : testing::standard_presets()) {
    auto A = oracle::rewrite_algebra(*alg);
    for (int i = 0; i < 25; ++i) {
      OreElem p = testing::random_elem(rng, alg, 3, 2);
      OreElem q = testing::random_elem(rng, alg, 3, 2);
      EXPECT_EQ(oracle::to_sparse(p * q), oracle::mul(A, oracle::to_sparse(p), oracle::to_sparse(q))) << name;
    }
  }
}

TEST_F(OreTest, NonMonomialTwistsAgreeWithRewriteOracle) {
  testing::Rng rng(30);
  for (FieldSpec f : {Q, FieldSpec::prime(7)}) {
    std::vector<AlgebraPtr> algs = {
        OreAlgebra::power(eval_poly_expr("y^2 + y", f), eval_poly_expr("y^3", f)),
        OreAlgebra::power(eval_poly_expr("2*y^3 - y + 1", f), eval_poly_expr("y + 1", f)),
        OreAlgebra::create(f, CoeffRing::polynomials, Poly::variable(f), eval_poly_expr("y^2", f)),
        OreAlgebra::q_weyl(Scalar(f, 3L)),
    };
    for (const auto& alg : algs) {
      auto A = oracle::rewrite_algebra(*alg);
      for (int i = 0; i < 25; ++i) {
        Poly r = testing::random_poly(rng, f, 5);
        EXPECT_EQ(oracle::sparse(alg->delta(r)), oracle::delta(A, oracle::sparse(r))) << alg->to_string();
        EXPECT_EQ(oracle::sparse(alg->sigma(r)), oracle::sigma(A, oracle::sparse(r))) << alg->to_string();
        OreElem p = testing::random_elem(rng, alg, 2, 2);
        OreElem q = testing::random_elem(rng, alg, 2, 2);
        EXPECT_EQ(oracle::to_sparse(p * q), oracle::mul(A, oracle::to_sparse(p), oracle::to_sparse(q)));
      }
    }
  }
}

TEST_F(OreTest, Associativity) {
  testing::Rng rng(31);
  for (const auto& [name, alg] : testing::standard_presets()) {
    for (int i = 0; i < 200; ++i) {
      OreElem p = testing::random_elem(rng, alg, 2, 2);
      OreElem q = testing::random_elem(rng, alg, 2, 2);
      OreElem r = testing::random_elem(rng, alg, 2, 2);
      ASSERT_EQ((p * q) * r, p * (q * r)) << name;
      ASSERT_EQ(p * (q + r), p * q + p * r) << name;
    }
  }
}

TEST_F(OreTest, LeftModuleAxioms) {
  testing::Rng rng(37);
  for (const auto& [name, alg] : testing::standard_presets()) {
    for (int i = 0; i < 50; ++i) {
      RatFunc a(testing::random_poly(rng, Q, 3));
      RatFunc b(testing::random_poly(rng, Q, 3));
      OreElem p = testing::random_elem(rng, alg, 3, 2);
      OreElem q = testing::random_elem(rng, alg, 3, 2);
      EXPECT_EQ(ore_scale(a * b, p), ore_scale(a, ore_scale(b, p))) << name;
      EXPECT_EQ(ore_scale(a + b, p), ore_scale(a, p) + ore_scale(b, p)) << name;
      EXPECT_EQ(ore_scale(a, p + q), ore_scale(a, p) + ore_scale(a, q)) << name;
      EXPECT_EQ(ore_scale(a, p), OreElem::monomial(alg, a) * p) << name;
    }
  }
}

TEST_F(OreTest, SigmaLeibnizIdentity) {
  testing::Rng rng(41);
  for (const auto& [name, alg] : testing::standard_presets()) {
    for (int i = 0; i < 100; ++i) {
      RatFunc r(testing::random_poly(rng, Q, 5));
      RatFunc s(testing::random_poly(rng, Q, 5));
      EXPECT_EQ(alg->delta(r * s), alg->sigma(r) * alg->delta(s) + alg->delta(r) * s) << name;
      EXPECT_EQ(alg->sigma(r * s), alg->sigma(r) * alg->sigma(s)) << name;
    }
  }
}

TEST_F(OreTest, DegreeFormula) {
  testing::Rng rng(43);
  for (const auto& [name, alg] : testing::standard_presets()) {
    for (int i = 0; i < 100; ++i) {
      OreElem p = testing::random_elem(rng, alg, 3, 3, true);
      OreElem q = testing::random_elem(rng, alg, 3, 3, true);
      EXPECT_EQ((p * q).degree(), p.degree() + q.degree()) << name;
    }
  }
}

TEST_F(OreTest, LeadingCoefficientRelationForCommutingPairs) {
  testing::Rng rng(47);
  for (const auto& [name, alg] : testing::standard_presets()) {
    for (int i = 0; i < 10; ++i) {
      OreElem w = testing::random_elem(rng, alg, 2, 1, true);
      if (w.degree() < Degree(1)) w += OreElem::x(alg);
      OreElem a = testing::poly_of(testing::random_poly(rng, Q, 2, true), w);
      OreElem b = testing::poly_of(testing::random_poly(rng, Q, 2, true), w);
      ASSERT_TRUE(commutator(a, b).is_zero());
      auto n = static_cast<std::size_t>(a.degree().value());
      auto m = static_cast<std::size_t>(b.degree().value());
      EXPECT_EQ(a.leading() * alg->sigma_pow(b.leading(), n), b.leading() * alg->sigma_pow(a.leading(), m)) << name;
    }
  }
}

TEST_F(OreTest, ConstantsOverRationalFunctions) {
  AlgebraPtr weyl_rat = OreAlgebra::weyl(Q, CoeffRing::rational_functions);
  AlgebraPtr q_rat = OreAlgebra::q_weyl(Scalar(Q, 2L), CoeffRing::rational_functions);
  testing::Rng rng(53);
  for (const AlgebraPtr& alg : {weyl_rat, q_rat}) {
    for (int i = 0; i < 20; ++i) {
      RatFunc a(Poly(testing::random_scalar(rng, Q, true)));
      RatFunc b(Poly(testing::random_scalar(rng, Q)));
      EXPECT_TRUE(is_constant_coeff(*alg, a));
      EXPECT_TRUE(is_constant_coeff(*alg, a * b));
      EXPECT_TRUE(is_constant_coeff(*alg, a + b));
      EXPECT_TRUE(is_constant_coeff(*alg, a.inv()));
    }
  }
  EXPECT_TRUE(is_constant_coeff(*weyl, R({5})));
  EXPECT_FALSE(is_constant_coeff(*weyl, R({0, 1})));
  EXPECT_FALSE(is_constant_coeff(*qweyl3, R({0, 1})));
}

TEST_F(OreTest, QuotientRule) {
  AlgebraPtr weyl_rat = OreAlgebra::weyl(Q, CoeffRing::rational_functions);
  AlgebraPtr q_rat = OreAlgebra::q_weyl(Scalar(Q, 2L), CoeffRing::rational_functions);
  testing::Rng rng(59);
  for (int i = 0; i < 50; ++i) {
    RatFunc u(testing::random_poly(rng, Q, 3, true), testing::random_poly(rng, Q, 3, true));
    RatFunc ui = u.inv();
    EXPECT_EQ(weyl_rat->delta(ui), -(ui * weyl_rat->delta(u) * ui));
    // σ-derivation form: δ(u⁻¹) = −σ(u)⁻¹ δ(u) u⁻¹.
    EXPECT_EQ(q_rat->delta(ui), -(q_rat->sigma(u).inv() * q_rat->delta(u) * ui));
  }
}

TEST_F(OreTest, EvalBivar) {
  const Scalar one = Scalar::one(Q);
  BivarPoly s_minus_t(Q, CoeffMode::scalars);
  s_minus_t.add_term({1, 0}, one);
  s_minus_t.add_term({0, 1}, -one);
  OreElem p = y(weyl) * x(weyl) + ore_pow(x(weyl), 2);
  EXPECT_TRUE(eval_bivar(s_minus_t, p, p).is_zero());

  BivarPoly cusp(Q, CoeffMode::scalars);
  cusp.add_term({3, 0}, one);
  cusp.add_term({0, 2}, -one);
  EXPECT_TRUE(eval_bivar(cusp, ore_pow(x(weyl), 2), ore_pow(x(weyl), 3)).is_zero());

  BivarPoly st(Q, CoeffMode::scalars);
  st.add_term({1, 1}, one);
  try {
    eval_bivar(st, x(weyl), y(weyl));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_commuting);
  }
}

TEST_F(OreTest, EvalBivarPlacesCoefficientsOnTheLeft) {
  // f = y·s with P = x in the differential algebra: y·x, not x·y.
  BivarPoly f(Q, CoeffMode::poly_coeffs);
  f.add_term({1, 0}, Poly::variable(Q));
  EXPECT_EQ(eval_bivar(f, x(weyl), x(weyl)), y(weyl) * x(weyl));
}

TEST_F(OreTest, Centrality) {
  EXPECT_TRUE(is_central(OreElem::one(weyl)));
  EXPECT_TRUE(is_central(ore_pow(x(qweyl_m1), 2)));
  EXPECT_TRUE(is_central(ore_pow(y(qweyl_m1), 2)));
  EXPECT_FALSE(is_central(x(weyl)));
  EXPECT_FALSE(is_central(x(qweyl_m1)));

  // Cross-check x^2 y = y x^2 through the rewrite oracle.
  auto A = oracle::rewrite_algebra(*qweyl_m1);
  oracle::SparseElem x2{{{0, 2}, Scalar::one(Q)}};
  oracle::SparseElem yy{{{1, 0}, Scalar::one(Q)}};
  EXPECT_EQ(oracle::mul(A, x2, yy), oracle::mul(A, yy, x2));
}

TEST_F(OreTest, RootOfUnityCentreInPrimeField) {
  // q = 2 has order 3 in GF(7), so x^3 and y^3 are central.
  FieldSpec f7 = FieldSpec::prime(7);
  AlgebraPtr alg = OreAlgebra::q_weyl(Scalar(f7, 2L));
  EXPECT_TRUE(is_central(ore_pow(OreElem::x(alg), 3)));
  EXPECT_TRUE(is_central(ore_pow(OreElem::y(alg), 3)));
  EXPECT_FALSE(is_central(ore_pow(OreElem::x(alg), 2)));
}

TEST_F(OreTest, PolynomialRingRejectsFractions) {
  RatFunc inv_y(Poly::one(Q), Poly::variable(Q));
  EXPECT_THROW(OreElem::monomial(weyl, inv_y), Error);
}

}  // namespace
}  // namespace orebc
