#include "resonaut/groebner.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace resonaut;

namespace {

std::vector<QPoly> parse_all(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<QPoly> out;
  for (const char* t : texts) out.push_back(QPoly::parse(r, t));
  return out;
}

// Same ideal as a list of monic polynomials, order-insensitive.
void expect_same_basis(const std::vector<QPoly>& got, std::vector<QPoly> want) {
  ASSERT_EQ(got.size(), want.size());
  for (auto& w : want) {
    w = w.monic();
    bool found = false;
    for (const auto& g : got) found = found || g == w;
    EXPECT_TRUE(found) << "missing " << w.to_string();
  }
}

}  // namespace

TEST(Reduce, Examples) {
  auto r = make_ring({"a", "b"}, OrderKind::Lex);
  auto a = QPoly::variable(r, "a"), b = QPoly::variable(r, "b");
  EXPECT_TRUE(reduce(a * a, {a}).is_zero());
  EXPECT_EQ(reduce(a * b + b, {a - QPoly::constant(r, 1)}), b * Rational(2));
  EXPECT_EQ(reduce(a - b, {}), a - b);
}

TEST(Buchberger, Examples) {
  auto r = make_ring({"a", "b", "c"}, OrderKind::Lex);
  auto gb = groebner_basis(QIdeal(r, parse_all(r, {"a - b", "b - c"})));
  ASSERT_EQ(gb.gens.size(), 2u);
  EXPECT_EQ(gb.gens[0], QPoly::parse(r, "b - c"));
  EXPECT_EQ(gb.gens[1], QPoly::parse(r, "a - c"));

  auto gb2 = groebner_basis(QIdeal(r, parse_all(r, {"a^2", "a^3"})));
  ASSERT_EQ(gb2.gens.size(), 1u);
  EXPECT_EQ(gb2.gens[0], QPoly::parse(r, "a^2"));

  auto r2 = make_ring({"a11", "b11"});
  auto gb3 = groebner_basis(QIdeal(r2, parse_all(r2, {"a11 - b11"})));
  ASSERT_EQ(gb3.gens.size(), 1u);
  EXPECT_EQ(gb3.gens[0].to_string(), "a11 - b11");
}

TEST(Buchberger, MatchesIndependentBases) {
  // Reference bases computed independently with sympy.
  auto grevlex = make_ring({"x", "y", "z"}, OrderKind::DegRevLex);
  auto in = parse_all(grevlex, {"x^2 + y*z - 2", "y^2 + x*z - 3", "x*y + z^2 - 5"});
  expect_same_basis(groebner_basis(QIdeal(grevlex, in)).gens,
                    parse_all(grevlex, {"2*x*z + 3*y*z + 2*z^4 - 15*z^2 + 19", "2*x*z^2 - 5*x + 2*y - 3*z",
                                        "3*x + 2*y*z^2 - 5*y - 2*z", "x^2 + y*z - 2", "x*y + z^2 - 5",
                                        "x*z + y^2 - 3"}));
  auto lex = make_ring({"x", "y", "z"}, OrderKind::Lex);
  expect_same_basis(groebner_basis(QIdeal(grevlex, in), lex).gens,
                    parse_all(lex, {"361*x - 88*z^7 + 872*z^5 - 2690*z^3 + 2375*z",
                                    "361*y + 8*z^7 + 52*z^5 - 740*z^3 + 1425*z",
                                    "8*z^8 - 100*z^6 + 438*z^4 - 760*z^2 + 361"}));
  auto deglex = make_ring({"x", "y", "z"}, OrderKind::DegLex);
  expect_same_basis(groebner_basis(QIdeal(deglex, parse_all(deglex, {"x*y - z", "x^2 - y", "y^3 - x*z + 1"}))).gens,
                    parse_all(deglex, {"y*z^2 + y - z^2", "x - y*z + z^3 + z", "x^2 - y", "x*y - z",
                                       "x*z - z^2 - 1", "y^2 - z^2 - 1"}));
}

TEST(Eliminate, Examples) {
  auto r = make_ring({"t", "a", "b"});
  auto I = eliminate(QIdeal(r, parse_all(r, {"a - t", "b - t"})), {"t"});
  ASSERT_EQ(I.gens.size(), 1u);
  EXPECT_EQ(I.gens[0].to_string(), "a - b");
  EXPECT_EQ(I.ring->names, (std::vector<std::string>{"a", "b"}));

  auto r2 = make_ring({"t", "s", "a", "b", "y"});
  auto J = eliminate(QIdeal(r2, parse_all(r2, {"a - t*y", "b - y", "t*s - 1"})), {"t", "s"});
  ASSERT_EQ(J.gens.size(), 1u);
  EXPECT_EQ(J.gens[0].to_string(), "b - y");
  auto K = eliminate(QIdeal(r2, parse_all(r2, {"a - t*y", "b - t^2*y", "t*s - 1"})), {"t", "s", "y"});
  ASSERT_EQ(K.gens.size(), 0u);
}

TEST(Saturate, Examples) {
  auto r = make_ring({"x", "y"});
  auto x = QPoly::variable(r, "x"), y = QPoly::variable(r, "y");
  auto S = saturate(QIdeal(r, {x * y}), x);
  ASSERT_EQ(S.gens.size(), 1u);
  EXPECT_EQ(S.gens[0], y);
  auto T = saturate(QIdeal(r, {x}), y);
  ASSERT_EQ(T.gens.size(), 1u);
  EXPECT_EQ(T.gens[0], x);
  EXPECT_THROW(saturate(QIdeal(r, {x}), QPoly(r)), StructuralError);
}

TEST(IdealEqual, Examples) {
  auto r = make_ring({"a", "b"});
  EXPECT_TRUE(ideal_equal(QIdeal(r, parse_all(r, {"a - b"})), QIdeal(r, parse_all(r, {"2*a - 2*b"}))));
  EXPECT_FALSE(ideal_equal(QIdeal(r, parse_all(r, {"a"})), QIdeal(r, parse_all(r, {"a^2"}))));
  EXPECT_TRUE(ideal_equal(QIdeal(r), QIdeal(r, {QPoly(r)})));
}

TEST(Subalgebra, Examples) {
  auto r = make_ring({"a", "b"});
  auto ab = QPoly::parse(r, "a*b");
  auto rep = subalgebra_member(ab, {ab});
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(rep->to_string(), "u1");
  EXPECT_FALSE(subalgebra_member(QPoly::parse(r, "a"), {ab}).has_value());
  auto rep2 = subalgebra_member(QPoly::parse(r, "a^2*b^2 + a*b"), {ab});
  ASSERT_TRUE(rep2.has_value());
  EXPECT_EQ(rep2->to_string(), "u1^2 + u1");
}

TEST(Subalgebra, RepresentationEvaluatesBack) {
  auto r = make_ring({"x", "y"});
  std::vector<QPoly> gens = parse_all(r, {"x^2", "x*y", "y^2"});
  SubalgebraMembership<Rational> sub(r, gens);
  auto f = QPoly::parse(r, "x^4 + 3*x^3*y - y^6 + 2");
  auto rep = sub.represent(f);
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(rep->substitute(gens), f);
  EXPECT_FALSE(sub.contains(QPoly::parse(r, "x^3")));
  EXPECT_FALSE(sub.contains(QPoly::parse(r, "x + y")));
}

TEST(ToricKernel, Examples) {
  auto r = make_ring({"a", "b"});
  auto I = toric_kernel<Rational>(r, {{Rational(1), {1}}, {Rational(1), {1}}});
  ASSERT_EQ(I.gens.size(), 1u);
  EXPECT_EQ(I.gens[0].to_string(), "a - b");
  // a = y t^-1, b = y t are algebraically independent.
  auto J = toric_kernel<Rational>(r, {{Rational(1), {1, -1}}, {Rational(1), {1, 1}}});
  EXPECT_TRUE(J.gens.empty());
  EXPECT_THROW(toric_kernel<Rational>(r, {{Rational(0), {1}}, {Rational(1), {1}}}), StructuralError);
  // Twisted parametrization a = t, b = zeta t over Q(zeta_3).
  auto rz = make_ring({"a", "b"}, OrderKind::DegLex, 3);
  auto K = toric_kernel<Cyclotomic>(rz, {{Cyclotomic(3, Rational(1)), {1}}, {Cyclotomic::zeta(3), {1}}});
  ASSERT_EQ(K.gens.size(), 1u);
  EXPECT_EQ(K.gens[0], ZPoly::parse(rz, "a - zeta^2*b"));
}

// Randomized properties ---------------------------------------------------------

namespace {

struct Fixture {
  RingPtr ring = make_ring({"x", "y", "z"});
  std::mt19937 rng{2024};
  std::vector<Rational> point{Rational(1), Rational(-2), Rational(3)};

  QPoly random_poly(int terms, int maxdeg) {
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, maxdeg);
    std::vector<Term<Rational>> ts;
    for (int i = 0; i < terms; ++i) ts.push_back({{ex(rng), ex(rng), ex(rng)}, Rational(coef(rng))});
    return QPoly(ring, ts);
  }
  // Random polynomial vanishing at `point`.
  QPoly vanishing(int terms, int maxdeg) {
    QPoly p = random_poly(terms, maxdeg);
    return p - QPoly::constant(ring, p.evaluate(point));
  }
};

}  // namespace

TEST(GroebnerProperties, BuchbergerCriterionHolds) {
  Fixture fx;
  for (int i = 0; i < 25; ++i) {
    QIdeal I(fx.ring, {fx.vanishing(2, 2), fx.vanishing(2, 2), fx.vanishing(1, 2)});
    for (auto kind : {OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}) {
      auto gb = groebner_basis(I, make_ring(fx.ring->names, kind));
      EXPECT_TRUE(satisfies_buchberger_criterion(gb.gens));
      for (const auto& g : I.gens) EXPECT_TRUE(reduce(g.in_ring(gb.ring), gb.gens).is_zero());
    }
  }
}

TEST(GroebnerProperties, MembershipAgreesWithPointOracle) {
  Fixture fx;
  for (int i = 0; i < 50; ++i) {
    std::vector<QPoly> gens{fx.vanishing(3, 2), fx.vanishing(2, 2)};
    QIdeal I(fx.ring, gens);
    auto gb = groebner_basis(I);
    QPoly member = fx.random_poly(2, 1) * gens[0] + fx.random_poly(2, 1) * gens[1];
    EXPECT_TRUE(reduce(member, gb.gens).is_zero());
    QPoly other = fx.random_poly(3, 2);
    if (!is_zero(other.evaluate(fx.point))) EXPECT_FALSE(reduce(other, gb.gens).is_zero());
  }
}

TEST(GroebnerProperties, SaturationIdempotentAndSequentialAgrees) {
  Fixture fx;
  auto x = QPoly::variable(fx.ring, "x"), y = QPoly::variable(fx.ring, "y");
  for (int i = 0; i < 10; ++i) {
    QIdeal I(fx.ring, {fx.vanishing(3, 2) * x, fx.vanishing(2, 2) * y});
    auto S = saturate(I, x * y);
    EXPECT_TRUE(ideal_equal(saturate(S, x * y), S));
    EXPECT_TRUE(ideal_equal(saturate_by_variables(I, {"x", "y"}), S));
  }
}

TEST(GroebnerProperties, EliminationIgnoresUnitRescaling) {
  Fixture fx;
  for (int i = 0; i < 10; ++i) {
    QPoly f = fx.vanishing(3, 2), g = fx.vanishing(3, 2);
    auto E1 = eliminate(QIdeal(fx.ring, {f, g}), {"x"});
    auto E2 = eliminate(QIdeal(fx.ring, {f * Rational(-3), g * Rational(2, 7)}), {"x"});
    EXPECT_TRUE(ideal_equal(E1, E2));
  }
}
