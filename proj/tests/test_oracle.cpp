#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclospec/oracle.hpp"
#include "cyclospec/sequences.hpp"
#include "test_support.hpp"

using namespace cyclospec;
using cyclospec::testing::poly;

namespace {

IntMatrix cycle_laplacian(long n) {
  const auto g = GroupSpec::cyclic(n);
  return laplacian_of(cayley_graph(g, GeneratorSet::standard(g)));
}

std::vector<std::vector<IntPoly>> lambda_minus(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<IntPoly>> out(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = (i == j ? IntPoly::variable() : IntPoly()) - IntPoly{m(i, j)};
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("bareiss determinant") {
  CHECK(bareiss_determinant({{BigInt(5)}}) == 5);
  CHECK(bareiss_determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(bareiss_determinant({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK(bareiss_determinant({}) == 1);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 1 + static_cast<std::size_t>(iter % 6);
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    std::vector<std::vector<IntPoly>> pm(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = d(rng);
        m[i][j] = v;
        pm[i][j] = IntPoly{v};
      }
    const IntPoly ref = cyclospec::testing::leibniz_det(pm);
    CHECK(bareiss_determinant(m) == (ref.is_zero() ? BigInt(0) : ref.coeff(0)));
  }
}

TEST_CASE("charpoly_exact examples") {
  const auto z1 = charpoly_exact(IntMatrix::from_rows({{0}}));
  CHECK(z1.in_lambda == poly({0, 1}));
  const auto z2 = charpoly_exact(cycle_laplacian(2));
  CHECK(z2.in_lambda == poly({0, -2, 1}));
  CHECK(z2.in_lambda != cycle_poly(2));
  CHECK(z2.in_a != cycle_poly(2));
  // In the a variable the one-vertex case happens to coincide with A_1.
  CHECK(z1.in_a == cycle_poly(1));
  CHECK(z1.in_lambda != cycle_poly(1));
  const auto z4 = charpoly_exact(cycle_laplacian(4));
  CHECK(z4.in_lambda == poly({0, -16, 20, -8, 1}));
  CHECK_THROWS_AS(charpoly_exact(IntMatrix(0)), DimensionError);
}

TEST_CASE("charpoly_exact equals the recurrence for the n-cycle") {
  for (long n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(charpoly_exact(cycle_laplacian(n)).in_a == cycle_poly(n));
  }
}

TEST_CASE("charpoly_exact against the Leibniz expansion") {
  const std::vector<IntMatrix> mats{
      cycle_laplacian(5),
      IntMatrix::from_rows({{3, -1, -1, -1}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}}),
      IntMatrix::from_rows({{2, 7, -3}, {0, -4, 1}, {5, 5, 5}}),
      IntMatrix(3),
  };
  for (const auto& m : mats) {
    const auto cp = charpoly_exact(m);
    CHECK(cp.in_lambda == cyclospec::testing::leibniz_det(lambda_minus(m)));
    CHECK(cp.in_lambda.is_monic());
    CHECK(cp.in_lambda.degree() == static_cast<long>(m.size()));
    const BigInt sign = m.size() % 2 == 0 ? 1 : -1;
    CHECK(cp.in_a == sign * compose(cp.in_lambda, poly({2, -1})));
  }
}

TEST_CASE("eig_numeric examples") {
  auto e3 = eig_numeric(cycle_laplacian(3));
  REQUIRE(e3.size() == 3);
  CHECK(std::abs(e3[0]) < 1e-9);
  CHECK(std::abs(e3[1] - 3) < 1e-9);
  CHECK(std::abs(e3[2] - 3) < 1e-9);

  const std::vector<double> want6{0, 1, 1, 3, 3, 4};
  auto e6 = eig_numeric(cycle_laplacian(6));
  REQUIRE(e6.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(e6[i] - want6[i]) < 1e-9);

  for (double v : eig_numeric(IntMatrix(4))) CHECK(v == 0.0);

  CHECK_THROWS_AS(eig_numeric(IntMatrix::from_rows({{0, 1}, {0, 0}})), NonSymmetricError);
  CHECK_THROWS_AS(eig_numeric(cycle_laplacian(5), 0.0), NonConvergenceError);
}

TEST_CASE("eig_numeric against the circulant formula") {
  for (long n = 3; n <= 40; ++n) {
    CAPTURE(n);
    const auto got = eig_numeric(cycle_laplacian(n));
    const auto want = cyclospec::testing::circulant_cycle_eigenvalues(n);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
  }
}

TEST_CASE("eigenvalues annihilate the characteristic polynomial; sum equals the trace") {
  for (long n = 1; n <= 32; ++n) {
    CAPTURE(n);
    const IntMatrix lap = cycle_laplacian(n);
    const auto cp = charpoly_exact(lap);
    double max_coeff = 0;
    for (const auto& c : cp.in_lambda.coeffs()) max_coeff = std::max(max_coeff, std::abs(c.get_d()));
    const auto eig = eig_numeric(lap);
    for (double v : eig) CHECK(std::abs(static_cast<double>(eval(cp.in_lambda, static_cast<long double>(v)))) <=
                               1e-6 * (1 + max_coeff));
    long trace = 0;
    for (std::size_t i = 0; i < lap.size(); ++i) trace += lap(i, i);
    CHECK(std::abs(std::accumulate(eig.begin(), eig.end(), 0.0) - trace) <= static_cast<double>(n) * 1e-12);
  }
}

}  // TEST_SUITE
