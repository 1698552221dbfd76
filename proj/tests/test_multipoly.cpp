#include "resonaut/multipoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace resonaut;

namespace {

QPoly random_poly(std::mt19937& rng, const RingPtr& r, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, maxdeg);
  std::vector<Term<Rational>> ts;
  for (int i = 0; i < terms; ++i) {
    Exponent e(static_cast<std::size_t>(r->nvars()));
    for (auto& x : e) x = ex(rng);
    ts.push_back({e, Rational(coef(rng))});
  }
  return QPoly(r, ts);
}

}  // namespace

TEST(MonomialOrder, DegLexExamples) {
  auto o = MonomialOrder::simple(OrderKind::DegLex, 2);
  EXPECT_GT(o.compare({1, 0}, {0, 1}), 0);
  EXPECT_LT(o.compare({1, 0}, {2, 0}), 0);
  EXPECT_EQ(o.compare({1, 1}, {1, 1}), 0);
  EXPECT_THROW(o.compare({1, 0}, {1, 0, 0}), StructuralError);
}

TEST(MonomialOrder, BlockEliminates) {
  MonomialOrder o({{{0}, OrderKind::DegLex}, {{1}, OrderKind::DegLex}});
  EXPECT_LT(o.compare({0, 5}, {1, 0}), 0);
}

TEST(MonomialOrder, DegRevLexTiebreak) {
  auto o = MonomialOrder::simple(OrderKind::DegRevLex, 3);
  // x*z^2 < y^3 under degrevlex (smaller power of the last variable wins)
  EXPECT_LT(o.compare({1, 0, 2}, {0, 3, 0}), 0);
  EXPECT_GT(o.compare({1, 1, 1}, {0, 1, 2}), 0);
}

TEST(MonomialOrder, RejectsBadBlocks) {
  EXPECT_THROW(make_ring({"a", "b"}, MonomialOrder({{{0}, OrderKind::Lex}})), StructuralError);
  EXPECT_THROW(make_ring({"a", "a"}), StructuralError);
}

class OrderProperties : public ::testing::TestWithParam<OrderKind> {};

TEST_P(OrderProperties, TotalMultiplicativeRefinesDivisibility) {
  auto o = MonomialOrder::simple(GetParam(), 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ex(0, 3);
  auto rnd = [&] {
    Exponent e(4);
    for (auto& x : e) x = ex(rng);
    return e;
  };
  for (int i = 0; i < 300; ++i) {
    Exponent a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(o.compare(a, b), -o.compare(b, a));
    if (o.compare(a, b) < 0 && o.compare(b, c) < 0) EXPECT_LT(o.compare(a, c), 0);
    if (o.compare(a, b) < 0) EXPECT_LT(o.compare(a + c, b + c), 0);
    if (o.compare(a, b) == 0) EXPECT_EQ(a, b);
    if (a != a + c) EXPECT_LT(o.compare(a, a + c), 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, OrderProperties,
                         ::testing::Values(OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex));

TEST(Polynomial, DifferenceOfSquares) {
  auto r = make_ring({"a", "b"});
  auto a = QPoly::variable(r, "a"), b = QPoly::variable(r, "b");
  EXPECT_EQ((a - b) * (a + b), a * a - b * b);
  EXPECT_EQ(((a - b) * (a + b)).to_string(), "a^2 - b^2");
  EXPECT_TRUE((QPoly(r) * a).is_zero());
}

TEST(Polynomial, ZetaCancels) {
  auto r = make_ring({"a"}, OrderKind::DegLex, 3);
  auto a = ZPoly::variable(r, "a");
  Cyclotomic z = Cyclotomic::zeta(3);
  EXPECT_EQ((a * z) * (a * (z * z)), a * a);
}

TEST(Polynomial, RingMismatch) {
  auto r1 = make_ring({"a"}), r2 = make_ring({"b"});
  EXPECT_THROW(QPoly::variable(r1, 0) * QPoly::variable(r2, 0), StructuralError);
}

TEST(Polynomial, Evaluation) {
  auto r = make_ring({"a", "b", "c"}, OrderKind::DegLex, 3);
  Cyclotomic one(3, Rational(1)), z = Cyclotomic::zeta(3);
  auto p = ZPoly::parse(r, "a - b");
  EXPECT_TRUE(p.evaluate(std::map<std::string, Cyclotomic>{{"a", z}, {"b", z}}).is_zero());
  auto q = ZPoly::parse(r, "a*b*c");
  EXPECT_EQ(q.evaluate(std::map<std::string, Cyclotomic>{{"a", one}, {"b", z}, {"c", z * z}}), one);
  auto s = ZPoly::parse(r, "a^2");
  EXPECT_EQ(s.evaluate(std::map<std::string, Cyclotomic>{{"a", one + z}}), z);
  EXPECT_THROW(q.evaluate(std::map<std::string, Cyclotomic>{{"a", one}}), StructuralError);
}

TEST(Polynomial, PrintFormats) {
  auto r = make_ring({"a001", "a100", "c010", "a101"}, OrderKind::DegLex, 3);
  auto p = ZPoly::parse(r, "(1 + zeta)*a001*a100*c010 - (1+zeta)*a101*c010 - zeta*a001*a100*c010");
  EXPECT_EQ(p.to_string(), "a001*a100*c010 - (1 + zeta)*c010*a101");
  EXPECT_EQ(ZPoly::parse(r, "-2*a100^3 + 1/2").to_string(), "-2*a100^3 + 1/2");
  EXPECT_EQ(ZPoly::parse(r, "zeta^2*a100").to_string(), "-(1 + zeta)*a100");
  EXPECT_EQ(ZPoly(r).to_string(), "0");
}

TEST(Polynomial, ParseErrors) {
  auto r = make_ring({"a", "b"});
  EXPECT_THROW(QPoly::parse(r, "a + c"), StructuralError);
  EXPECT_THROW(QPoly::parse(r, "zeta*a"), StructuralError);
  EXPECT_THROW(QPoly::parse(r, "a +* b"), StructuralError);
}

TEST(Polynomial, TextRoundTripRandom) {
  auto r = make_ring({"a100", "b010", "c001"}, OrderKind::DegLex, 3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 3);
  for (int i = 0; i < 50; ++i) {
    std::vector<Term<Cyclotomic>> ts;
    for (int k = 0; k < 4; ++k)
      ts.push_back({{ex(rng), ex(rng), ex(rng)}, Cyclotomic(3, {Rational(coef(rng)), Rational(coef(rng), 3)})});
    ZPoly p(r, ts);
    EXPECT_EQ(ZPoly::parse(r, p.to_string()), p) << p.to_string();
    EXPECT_EQ(ZPoly::parse(r, p.to_string()).to_string(), p.to_string());
  }
}

TEST(Polynomial, RingAxiomsRandom) {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937 rng(42);
  for (int i = 0; i < 100; ++i) {
    QPoly f = random_poly(rng, r, 4, 3), g = random_poly(rng, r, 4, 3), h = random_poly(rng, r, 3, 2);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * QPoly::constant(r, 1), f);
    if (!f.is_zero() && !g.is_zero()) EXPECT_EQ((f * g).total_degree(), f.total_degree() + g.total_degree());
  }
}

TEST(Polynomial, DerivativeAndSubstitution) {
  auto r = make_ring({"x", "y"});
  auto f = QPoly::parse(r, "x^3*y + 2*x*y^2 - 7");
  EXPECT_EQ(f.derivative(0), QPoly::parse(r, "3*x^2*y + 2*y^2"));
  auto g = f.substitute({QPoly::parse(r, "x + y"), QPoly::parse(r, "y")});
  EXPECT_EQ(g, QPoly::parse(r, "(x+y)^3*y + 2*(x+y)*y^2 - 7"));
  EXPECT_EQ(f.truncate({0, 1}, 3), QPoly::parse(r, "2*x*y^2 - 7"));
  EXPECT_EQ(f.homogeneous_part({0}, 3), QPoly::parse(r, "x^3*y"));
}

TEST(Polynomial, RingChangeAndPromotion) {
  auto r = make_ring({"x", "y"});
  auto big = make_ring({"y", "w", "x"}, OrderKind::Lex, 5);
  auto f = QPoly::parse(r, "x^2 - 3*y");
  auto pf = promote(f, big);
  EXPECT_EQ(pf, ZPoly::parse(big, "x^2 - 3*y"));
  auto back = demote(pf, r);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, f);
  EXPECT_FALSE(demote(ZPoly::parse(big, "zeta*x"), r).has_value());
  auto lexr = with_order(r, MonomialOrder::simple(OrderKind::Lex, 2));
  EXPECT_EQ(f.in_ring(lexr).to_string(), "x^2 - 3*y");
}
