#include <random>

#include "braidsplice/exactalg.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsp;
using bsp::testing::random_point;
using bsp::testing::random_poly;

static Polynomial P(const char* s) { return Polynomial::parse(s); }
static RationalFunction F(const char* s) { return RationalFunction::parse(s); }

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-3").str() == "-3");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("term order is graded lex with z1 < z2 < ...") {
  Polynomial p = P("z1^2 + z2 + z1*z3 + z2*z2 + 1 + z3");
  CHECK(p.str() == "z1*z3 + z2^2 + z1^2 + z3 + z2 + 1");
  CHECK(P("-z6*z7 + z5*z8").str() == "z5*z8 - z6*z7");
  CHECK(P("z5*z8 - z6*z7") == P("-z6*z7 + z5*z8"));
}

TEST_CASE("parser round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_poly(rng, 4, 5, 3);
    CHECK(Polynomial::parse(p.str()) == p);
  }
  CHECK(F("(z1^2 - 1)/(z1 + 1)") == F("z1 - 1"));
  CHECK_THROWS_AS(P("z1 +"), ParseError);
  CHECK_THROWS_AS(P("z1/z2"), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Polynomial a = random_poly(rng, 4, 4, 3), b = random_poly(rng, 4, 4, 3), c = random_poly(rng, 4, 4, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    Assignment pt = random_point(rng, 4);
    CHECK((a * b + c).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    Polynomial a = random_poly(rng, 4, 4, 3), b = random_poly(rng, 4, 3, 2);
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
  }
  CHECK_FALSE(divide_exact(P("z1 + 1"), P("z1")));
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P("z1*z2"), P("z1")) == P("z1"));
  Polynomial p = P("3*z1*z2 - 6*z3");
  CHECK(poly_gcd(p, p) == p.monic());
  CHECK(poly_gcd(p, Polynomial()) == p.monic());
  CHECK(poly_gcd(P("z5*z8 - z6*z7"), P("z5")) == Polynomial(1));
  // substitution oracle: z5 = 0 leaves a nonzero remainder
  CHECK_FALSE(P("z5*z8 - z6*z7").partial_evaluate({{make_var('z', 5), 0}}).is_zero());
}

TEST_CASE("poly_gcd recovers planted common factors") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    Polynomial a = random_poly(rng, 4, 3, 2), b = random_poly(rng, 4, 3, 2), c = random_poly(rng, 4, 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Polynomial g = poly_gcd(a * c, b * c);
    // g divides both, c divides g, and the cofactors have constant gcd
    auto qa = divide_exact(a * c, g), qb = divide_exact(b * c, g);
    REQUIRE(qa);
    REQUIRE(qb);
    CHECK(divide_exact(g, c.is_constant() ? Polynomial(1) : c));
    CHECK(poly_gcd(*qa, *qb).is_constant());
    CHECK(g.leading_coefficient() == Rational(1));
  }
}

TEST_CASE("rf_normalize") {
  CHECK(rf_normalize(P("z1^2"), P("z1")) == RationalFunction(P("z1")));
  CHECK(rf_normalize(Polynomial(), P("z1")).is_zero());
  CHECK(rf_normalize(P("z1*z2 + z2"), P("z2")) == RationalFunction(P("z1 + 1")));
  CHECK_THROWS_AS(rf_normalize(P("z1"), Polynomial()), ZeroDenominator);
  RationalFunction r = rf_normalize(P("z1"), P("2*z2 + 4"));
  CHECK(r.den() == P("z2 + 2"));
  CHECK(r.num() == P("1/2*z1"));
}

TEST_CASE("rational function arithmetic agrees with evaluation") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 50) {
    Polynomial a = random_poly(rng, 3, 3, 2), b = random_poly(rng, 3, 3, 2);
    Polynomial c = random_poly(rng, 3, 3, 2), d = random_poly(rng, 3, 3, 2);
    if (b.is_zero() || d.is_zero() || c.is_zero()) continue;
    RationalFunction x(a, b), y(c, d);
    Assignment pt = random_point(rng, 3);
    Rational vb = b.evaluate(pt), vd = d.evaluate(pt), vc = c.evaluate(pt);
    if (vb.is_zero() || vd.is_zero() || vc.is_zero()) continue;
    Rational va = a.evaluate(pt) / vb, vy = vc / vd;
    CHECK((x + y).evaluate(pt) == va + vy);
    CHECK((x - y).evaluate(pt) == va - vy);
    CHECK((x * y).evaluate(pt) == va * vy);
    CHECK((x / y).evaluate(pt) == va / vy);
    CHECK((x + y) - y == x);
    ++checked;
  }
}

TEST_CASE("evaluate") {
  Var z1 = make_var('z', 1), z2 = make_var('z', 2);
  CHECK(F("z1 + 1").evaluate({{z1, 1}}) == Rational(2));
  CHECK_THROWS_AS(F("z1/z2").evaluate({{z1, 3}, {z2, 0}}), PoleAtPoint);
  CHECK_THROWS_AS(F("z1 + z2").evaluate({{z1, 3}}), MissingVariable);
  Assignment pt;
  pt[make_var('z', 5)] = 1;
  pt[make_var('z', 6)] = 1;
  pt[make_var('z', 7)] = 1;
  pt[make_var('z', 8)] = 2;
  CHECK(P("-z6*z7 + z5*z8").evaluate(pt) == Rational(1));
}

TEST_CASE("factor_against_pool") {
  auto f = factor_against_pool(P("z1*z4"), {});
  CHECK(f.vars == std::vector<std::pair<Var, unsigned>>{{make_var('z', 1), 1}, {make_var('z', 4), 1}});
  CHECK(f.remainder == Polynomial(1));

  Polynomial q = P("z5*z8 - z6*z7");
  f = factor_against_pool(q, {q});
  CHECK(f.pool_exponents == std::vector<unsigned>{1});
  CHECK(f.remainder == Polynomial(1));

  f = factor_against_pool(P("-3") * q * P("z5^2"), {q});
  CHECK(f.pool_exponents == std::vector<unsigned>{1});
  CHECK(f.vars == std::vector<std::pair<Var, unsigned>>{{make_var('z', 5), 2}});
  CHECK(f.remainder == Polynomial(1));
  CHECK(f.unit == Rational(-3));
}

TEST_CASE("factor_against_pool reconstruction") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_poly(rng, 4, 3, 2), b = random_poly(rng, 4, 2, 2), r = random_poly(rng, 4, 3, 2);
    if (a.is_constant() || b.is_constant() || r.is_zero()) continue;
    Polynomial p = a * a * b * r;
    auto f = factor_against_pool(p, {a, b});
    Polynomial back = f.remainder * Polynomial(f.unit);
    back *= a.pow(f.pool_exponents[0]) * b.pow(f.pool_exponents[1]);
    for (auto& [v, e] : f.vars) back *= Polynomial::var(v).pow(e);
    CHECK(back == p);
    CHECK(f.pool_exponents[0] >= 2);
    CHECK_FALSE(divide_exact(f.remainder, a));
  }
}

TEST_CASE("laurent monomials") {
  LaurentMonomial m;
  m.exps[make_var('u', 1)] = -1;
  m.exps[make_var('u', 3)] = -1;
  CHECK(m.str() == "u1^-1*u3^-1");
  CHECK((m * m.inverse()).exps.empty());
  CHECK(m.to_rf() == F("1/(u1*u3)"));
}
