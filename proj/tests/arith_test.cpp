#include <gtest/gtest.h>

#include <random>

#include "qloop/bigint.hpp"
#include "qloop/cyclotomic.hpp"
#include "qloop/errors.hpp"
#include "qloop/laurent_poly.hpp"
#include "qloop/phi_adic.hpp"
#include "qloop/qcomb.hpp"

using namespace qloop;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int span) {
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> count(0, 6);
  std::vector<LaurentPoly::Term> terms;
  for (int i = count(rng); i > 0; --i) terms.emplace_back(exp(rng), BigInt(coef(rng)));
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

TEST(BigInt, PromotesPastMachineWords) {
  const BigInt big = BigInt::from_string("123456789012345678901234567890");
  EXPECT_EQ(big.to_string(), "123456789012345678901234567890");
  const BigInt sq = big * big;
  BigInt quot, rem;
  BigInt::divmod(sq, big, quot, rem);
  EXPECT_EQ(quot, big);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ((sq - sq).to_string(), "0");
}

TEST(BigInt, GcdAndBinomial) {
  EXPECT_EQ(BigInt::gcd(BigInt(84), BigInt(-36)), BigInt(12));
  EXPECT_EQ(binomial(10, 3), BigInt(120));
  EXPECT_EQ(binomial(60, 30).to_string(), "118264581564861424");
  EXPECT_EQ(binomial(3, 5), BigInt(0));
}

TEST(Laurent, CanonicalRendering) {
  const LaurentPoly p = LaurentPoly::from_terms({{3, 1}, {-1, 2}, {1, 2}, {-3, 1}, {0, 0}});
  EXPECT_EQ(p.to_string(), "q^-3 + 2q^-1 + 2q + q^3");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(LaurentPoly::from_terms({{-2, -1}, {0, 3}, {1, 2}}).to_string(), "-q^-2 + 3 + 2q");
}

TEST(Laurent, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).inverted(), a.inverted() * b.inverted());
    EXPECT_EQ(a.shifted(3), a * LaurentPoly::q(3));
    if (!b.is_zero()) {
      const auto quot = LaurentPoly::divide_exact(a * b, b);
      ASSERT_TRUE(quot.has_value());
      EXPECT_EQ(*quot, a);
    }
  }
}

TEST(Laurent, DivideExactRejectsRemainder) {
  EXPECT_FALSE(LaurentPoly::divide_exact(LaurentPoly::q(2) + LaurentPoly(1), LaurentPoly::q(1) + LaurentPoly(1)));
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<BigInt>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<BigInt>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<BigInt>{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(10), 4);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(CyclotomicRing::get(n).degree(), euler_phi(2 * n));
}

TEST(Cyclotomic, ReductionIsARingHomomorphism) {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto& ring = CyclotomicRing::get(2 + i % 5);
    const auto a = random_poly(rng, 12), b = random_poly(rng, 12);
    const auto ra = CycloElem::reduce(ring, a), rb = CycloElem::reduce(ring, b);
    ASSERT_EQ(CycloElem::reduce(ring, a * b), ra * rb);
    ASSERT_EQ(CycloElem::reduce(ring, a + b), ra + rb);
  }
}

TEST(Cyclotomic, RootOfUnityFacts) {
  for (int n = 2; n <= 6; ++n) {
    const auto& ring = CyclotomicRing::get(n);
    // q^N = -1 and [N]_q = 0
    EXPECT_EQ(CycloElem::reduce(ring, LaurentPoly::q(n)), CycloElem::from_int(ring, -1));
    EXPECT_TRUE(CycloElem::reduce(ring, q_int(n)).is_zero());
    EXPECT_FALSE(CycloElem::reduce(ring, q_int(n - 1)).is_zero());
    const auto z = CycloElem::reduce(ring, LaurentPoly::q(1)).to_complex();
    EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
    EXPECT_NEAR(std::arg(z), M_PI / n, 1e-12);
  }
}

TEST(PhiAdic, EmbeddingAndValuation) {
  const auto& ring = CyclotomicRing::get(3);
  const auto phi = LaurentPoly::from_dense(0, cyclotomic_polynomial(6));
  const LaurentPoly x = LaurentPoly(2) + LaurentPoly::q(1);
  const auto e = PhiAdicElem::embed(ring, 4, phi * phi * x);
  EXPECT_EQ(e.valuation(), 2);
  EXPECT_EQ(PhiAdicElem::embed(ring, 4, x).term0(), CycloElem::reduce(ring, x));
  EXPECT_TRUE(PhiAdicElem::embed(ring, 4, phi.pow(5)).is_zero());
}

TEST(PhiAdic, DivisionThroughTheRootOfUnity) {
  for (int n = 2; n <= 5; ++n) {
    const auto& ring = CyclotomicRing::get(n);
    // [2N]_q! / [N]_q! carries one factor of Phi on each side
    const auto num = PhiAdicElem::embed(ring, 3, q_factorial(2 * n));
    const auto den = PhiAdicElem::embed(ring, 3, q_factorial(n));
    const auto quot = PhiAdicElem::divide(num, den);
    const auto exact = LaurentPoly::divide_exact(q_factorial(2 * n), q_factorial(n));
    ASSERT_TRUE(exact);
    EXPECT_EQ(quot.term0(), CycloElem::reduce(ring, *exact));
  }
}

TEST(PhiAdic, DivisionByHigherValuationThrows) {
  const auto& ring = CyclotomicRing::get(2);
  const auto one = PhiAdicElem::embed(ring, 3, LaurentPoly(1));
  const auto phi = PhiAdicElem::embed(ring, 3, q_int(2));
  try {
    (void)PhiAdicElem::divide(one, phi);
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
  }
}
