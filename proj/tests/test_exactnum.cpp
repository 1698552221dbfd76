#include "resonaut/exactnum.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace resonaut;

namespace {

Cyclotomic random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < n - 1; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return Cyclotomic(n, c);
}

}  // namespace

TEST(Cyclotomic, ZetaSquaredCubic) {
  Cyclotomic z = Cyclotomic::zeta(3);
  Cyclotomic zz = z * z;
  ASSERT_EQ(zz.coefficients().size(), 2u);
  EXPECT_EQ(zz.coefficients()[0], -1);
  EXPECT_EQ(zz.coefficients()[1], -1);
  EXPECT_EQ(to_string(zz), "-1 - zeta");
}

TEST(Cyclotomic, InverseOfOneMinusZeta) {
  Cyclotomic x = Cyclotomic(3, Rational(1)) - Cyclotomic::zeta(3);
  Cyclotomic inv = inverse(x);
  EXPECT_EQ(inv, Cyclotomic(3, {Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(to_string(inv), "2/3 + 1/3*zeta");
}

TEST(Cyclotomic, OrderTwoIsMinusOne) {
  EXPECT_EQ(Cyclotomic::zeta(2), Cyclotomic(2, Rational(-1)));
  EXPECT_TRUE(Cyclotomic::zeta(2).is_rational());
}

TEST(Cyclotomic, ZetaPowersCycle) {
  for (int n : {2, 3, 5, 7}) {
    Cyclotomic one(n, Rational(1));
    EXPECT_EQ(Cyclotomic::zeta(n).pow(n), one);
    EXPECT_EQ(Cyclotomic::zeta_power(n, -1) * Cyclotomic::zeta(n), one);
    Cyclotomic sum(n);
    for (int k = 0; k < n; ++k) sum += Cyclotomic::zeta_power(n, k);
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(Cyclotomic, MismatchedOrdersRejected) {
  EXPECT_THROW(Cyclotomic::zeta(3) + Cyclotomic::zeta(5), StructuralError);
  EXPECT_THROW(Cyclotomic(4), StructuralError);
}

TEST(Cyclotomic, ZeroHasNoInverse) {
  EXPECT_THROW(inverse(Cyclotomic(5)), DivisionByZero);
  EXPECT_THROW(inverse(Rational(0)), DivisionByZero);
  EXPECT_THROW(Cyclotomic(3, Rational(1)) / Cyclotomic(3), DivisionByZero);
}

TEST(Cyclotomic, TextRoundTrip) {
  EXPECT_EQ(parse_cyclotomic(3, "zeta^2"), Cyclotomic(3, {Rational(-1), Rational(-1)}));
  EXPECT_EQ(parse_cyclotomic(3, "-1 - zeta"), Cyclotomic::zeta(3) * Cyclotomic::zeta(3));
  EXPECT_EQ(parse_cyclotomic(5, "(1 + zeta)*(1 - zeta)"), Cyclotomic(5, Rational(1)) - Cyclotomic::zeta(5).pow(2));
  EXPECT_EQ(parse_cyclotomic(2, "3/4"), Cyclotomic(2, Rational(3, 4)));
  EXPECT_THROW(parse_cyclotomic(3, "x"), StructuralError);
  EXPECT_THROW(parse_cyclotomic(3, "1 +"), StructuralError);
  EXPECT_THROW(parse_cyclotomic(3, "1/0"), DivisionByZero);
  std::mt19937 rng(11);
  for (int n : {3, 5, 7})
    for (int i = 0; i < 30; ++i) {
      Cyclotomic a = random_element(rng, n);
      EXPECT_EQ(parse_cyclotomic(n, to_string(a)), a) << to_string(a);
    }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("abc"), StructuralError);
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_FALSE(is_prime(1));
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, HoldOnRandomElements) {
  const int n = GetParam();
  std::mt19937 rng(1000 + n);
  const Cyclotomic zero(n), one(n, Rational(1));
  for (int iter = 0; iter < 200; ++iter) {
    Cyclotomic a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * inverse(a), one);
  }
}

INSTANTIATE_TEST_SUITE_P(PrimeOrders, FieldAxioms, ::testing::Values(2, 3, 5, 7));
