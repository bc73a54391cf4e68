#include <doctest.h>

#include <random>

#include "cyclospec/polyalg.hpp"
#include "test_support.hpp"

using namespace cyclospec;
using cyclospec::testing::poly;

TEST_SUITE("polyalg") {

TEST_CASE("canonical form") {
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{1, 2, 0}.degree() == 1);
  const IntPoly p{-2, -3, 0, 1};
  CHECK((p - p).is_zero());
  CHECK((p - p).coeffs().empty());
  CHECK_THROWS_AS((void)IntPoly().leading(), ZeroPolynomialError);
  CHECK(p.to_string() == "a^3 - 3*a - 2");
  CHECK(IntPoly().to_string() == "0");
  CHECK(poly({0, -1}).to_string() == "-a");
}

TEST_CASE("add") {
  CHECK(poly({-1, 0, 1}) + poly({1}) == poly({0, 0, 1}));
  CHECK(poly({0, -2, 0, 1}) + IntPoly() == poly({0, -2, 0, 1}));
  // L_2 + L_4
  CHECK(poly({-1, 0, 1}) + poly({1, 0, -3, 0, 1}) == poly({0, 0, -2, 0, 1}));
}

TEST_CASE("mul") {
  CHECK(poly({-2, 1}) * poly({2, 1}) == poly({-4, 0, 1}));
  CHECK(IntPoly::variable() * IntPoly::variable() == poly({0, 0, 1}));
  const IntPoly l2l3 = poly({-1, 0, 1}) * poly({0, -2, 0, 1});
  // Spot check against plain integer evaluation of the factors.
  for (long x = -5; x <= 5; ++x) {
    const long want = cyclospec::testing::eval_ll({-1, 0, 1}, x) * cyclospec::testing::eval_ll({0, -2, 0, 1}, x);
    CHECK(eval(l2l3, BigInt(x)) == want);
  }
  CHECK(l2l3 == poly({0, 2, 0, -3, 0, 1}));
  CHECK((poly({1, 1}) * IntPoly()).is_zero());
}

TEST_CASE("divrem") {
  auto [q1, r1] = divrem(poly({-4, 0, 1}), poly({-2, 1}));
  CHECK(q1 == poly({2, 1}));
  CHECK(r1.is_zero());

  const IntPoly a6{-4, 0, 9, 0, -6, 0, 1};
  const IntPoly a3{-2, -3, 0, 1};
  auto [q2, r2] = divrem(a6, a3);
  CHECK(q2 == poly({2, -3, 0, 1}));
  CHECK(r2.is_zero());

  const IntPoly a5{-2, 5, 0, -5, 0, 1};
  auto [q3, r3] = divrem(a5, poly({-4, 0, 1}));
  CHECK_FALSE(r3.is_zero());
  CHECK(r3.degree() < 2);
  CHECK(q3 * poly({-4, 0, 1}) + r3 == a5);

  SUBCASE("non-monic divisor") {
    auto [q, r] = divrem(poly({0, 2, 2}), poly({0, 2}));
    CHECK(q == poly({1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divrem(poly({0, 0, 1}), poly({1, 2})), NonIntegralQuotient);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(divrem(a3, IntPoly()), DivisionByZeroPolynomial);
    CHECK_THROWS_AS(exact_quotient(a5, poly({-4, 0, 1})), NonIntegralQuotient);
  }
  SUBCASE("low-degree dividend") {
    auto [q, r] = divrem(poly({1, 1}), a3);
    CHECK(q.is_zero());
    CHECK(r == poly({1, 1}));
  }
}

TEST_CASE("pseudo remainder scales by the leading coefficient power") {
  const IntPoly p{1, 0, 0, 1};  // a^3 + 1
  const IntPoly q{1, 2};        // 2a + 1
  // 2^3 (a^3 + 1) = (2a + 1)(4a^2 - 2a + 1) + 7
  CHECK(pseudo_remainder(p, q) == poly({7}));
}

TEST_CASE("compose") {
  const IntPoly p{3, -1, 4, 1};
  CHECK(compose(p, IntPoly::variable()) == p);
  const IntPoly a2{-4, 0, 1};
  const IntPoly a3{-2, -3, 0, 1};
  CHECK(compose(a2, a3 + 2) == poly({-4, 0, 9, 0, -6, 0, 1}));
  CHECK(compose(a2, a2 + 2) == poly({0, 0, -4, 0, 1}));
  CHECK(compose(IntPoly(), a3).is_zero());
  CHECK(compose(poly({5}), a3) == poly({5}));
}

TEST_CASE("eval") {
  const IntPoly a3{-2, -3, 0, 1};
  CHECK(eval(a3, BigInt(2)) == 0);
  CHECK(eval(a3, BigInt(-1)) == 0);
  CHECK(eval(a3, Rational(1, 2)) == Rational(-27, 8));
  CHECK(eval(a3, 0.5) == doctest::Approx(-3.375));
  CHECK(eval(a3, 0.5L) == doctest::Approx(-3.375));
  CHECK(eval(IntPoly(), BigInt(7)) == 0);
}

TEST_CASE("derivative") {
  CHECK(derivative(poly({-4, 0, 1})) == poly({0, 2}));
  CHECK(derivative(poly({9})).is_zero());
  CHECK(derivative(IntPoly()).is_zero());
  CHECK(derivative(poly({0, 0, -4, 0, 1})) == poly({0, -8, 0, 4}));
}

TEST_CASE("content and primitive part") {
  CHECK(content(poly({4, -6, 2})) == 2);
  CHECK(content(poly({4, -6, -2})) == -2);
  CHECK(primitive_part(poly({4, -6, -2})) == poly({-2, 3, 1}));
  CHECK(content(IntPoly()) == 0);
}

TEST_CASE("gcd_primitive") {
  const IntPoly a3{-2, -3, 0, 1};
  const IntPoly a4{0, 0, -4, 0, 1};
  const IntPoly a5{-2, 5, 0, -5, 0, 1};
  const IntPoly a6{-4, 0, 9, 0, -6, 0, 1};
  CHECK(gcd_primitive(poly({6, 4}), IntPoly()) == poly({3, 2}));
  CHECK(gcd_primitive(IntPoly(), poly({-6, -4})) == poly({3, 2}));
  CHECK(gcd_primitive(a4, a6) == poly({-4, 0, 1}));
  CHECK(gcd_primitive(a3, a5) == poly({-2, 1}));
  CHECK(gcd_primitive(poly({2, 0, 2}), poly({3})) == poly({1}));
  CHECK_THROWS_AS(gcd_primitive(IntPoly(), IntPoly()), ZeroPolynomialError);
}

TEST_CASE("squarefree_decomposition") {
  SUBCASE("A_4") {
    auto d = squarefree_decomposition(poly({0, 0, -4, 0, 1}));
    CHECK(d.content == 1);
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].factor == poly({-4, 0, 1}));
    CHECK(d.factors[0].multiplicity == 1);
    CHECK(d.factors[1].factor == poly({0, 1}));
    CHECK(d.factors[1].multiplicity == 2);
    CHECK(d.root_multiplicity(0) == 2);
  }
  SUBCASE("already square-free") {
    auto d = squarefree_decomposition(poly({-4, 0, 1}));
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].factor == poly({-4, 0, 1}));
    CHECK(d.factors[0].multiplicity == 1);
  }
  SUBCASE("A_3") {
    auto d = squarefree_decomposition(poly({-2, -3, 0, 1}));
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].factor == poly({-2, 1}));
    CHECK(d.factors[0].multiplicity == 1);
    CHECK(d.factors[1].factor == poly({1, 1}));
    CHECK(d.factors[1].multiplicity == 2);
  }
  SUBCASE("content and sign") {
    const IntPoly p = IntPoly::constant(-6) * poly({1, 1}) * poly({1, 1}) * poly({0, 1});
    auto d = squarefree_decomposition(p);
    CHECK(d.content == -6);
    CHECK(d.expand() == p);
  }
  SUBCASE("constant") {
    auto d = squarefree_decomposition(poly({-5}));
    CHECK(d.content == -5);
    CHECK(d.factors.empty());
  }
  CHECK_THROWS_AS(squarefree_decomposition(IntPoly()), ZeroPolynomialError);
}

TEST_CASE("real roots") {
  auto r = real_roots(poly({-2, -3, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-12));

  auto m = real_roots_with_multiplicity(poly({-2, -3, 0, 1}));
  CHECK(m.size() == 3);

  auto s = real_roots(poly({-2, 0, 1}));
  REQUIRE(s.size() == 2);
  CHECK(s[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK(real_roots(poly({1, 0, 1})).empty());
  CHECK(real_roots(poly({3})).empty());
  // Non-monic, negative leading coefficient: -6a^2 + 5a - 1 = -(2a - 1)(3a - 1)
  auto t = real_roots(poly({-1, 5, -6}));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(t[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ring axioms and division properties on random polynomials") {
  std::mt19937_64 rng(20241016);
  using cyclospec::testing::random_nonzero_poly;
  using cyclospec::testing::random_poly;
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly p = random_poly(rng, 12, 100);
    const IntPoly q = random_poly(rng, 12, 100);
    const IntPoly r = random_poly(rng, 12, 100);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);

    const IntPoly monic = random_poly(rng, 6, 100) + IntPoly::monomial(1, 7);
    auto [quo, rem] = divrem(p, monic);
    CHECK(monic * quo + rem == p);
    CHECK(rem.degree() < monic.degree());

    const IntPoly x = random_nonzero_poly(rng, 4, 20);
    const IntPoly y = random_nonzero_poly(rng, 4, 20);
    const IntPoly common = random_nonzero_poly(rng, 4, 20);
    const IntPoly g = gcd_primitive(x * common, y * common);
    CHECK(g.leading() > 0);
    CHECK(pseudo_remainder(x * common, g).is_zero());
    CHECK(pseudo_remainder(y * common, g).is_zero());
    CHECK(pseudo_remainder(g, primitive_part(common)).is_zero());

    const IntPoly f = random_nonzero_poly(rng, 4, 10);
    const IntPoly h = random_nonzero_poly(rng, 3, 10);
    const IntPoly sq = f * f * h;
    CHECK(squarefree_decomposition(sq).expand() == sq);
  }
}

}  // TEST_SUITE
