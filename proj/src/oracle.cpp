#include "cyclospec/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cyclospec {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return 1;

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

CharPoly charpoly_exact(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DimensionError("characteristic polynomial of an empty matrix");

  std::vector<long> xs;
  xs.reserve(n + 1);
  xs.push_back(0);
  for (long step = 1; xs.size() < n + 1; ++step) {
    xs.push_back(step);
    if (xs.size() < n + 1) xs.push_back(-step);
  }

  std::vector<Rational> dd;
  dd.reserve(n + 1);
  for (long x : xs) {
    std::vector<std::vector<BigInt>> shifted(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted[i][j] = (i == j ? x : 0) - m(i, j);
    dd.emplace_back(bareiss_determinant(std::move(shifted)));
  }

  // Divided differences in place, then expand the Newton form.
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);

  std::vector<Rational> coeffs{dd[n]};
  for (std::size_t i = n; i-- > 0;) {
    // coeffs := coeffs * (x - xs[i]) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }

  std::vector<BigInt> ints;
  ints.reserve(coeffs.size());
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1) throw NonIntegralQuotient();
    ints.emplace_back(c.get_num());
  }
  CharPoly out;
  out.in_lambda = IntPoly(std::move(ints));
  out.in_a = compose(out.in_lambda, IntPoly{2, -1});
  if (n % 2 == 1) out.in_a = -out.in_a;
  return out;
}

std::vector<double> eig_numeric(const IntMatrix& m, double tol) {
  if (!m.is_symmetric()) throw NonSymmetricError("Jacobi eigensolver needs a symmetric matrix");
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<double>(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; off_norm() >= tol; ++sweep) {
    if (sweep == kMaxSweeps) throw NonConvergenceError("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Negligible against both diagonal entries: drop it.
        if (sweep > 3 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
            std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace cyclospec
