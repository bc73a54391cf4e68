#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.
//
// The single variable is written `a` throughout the project (a = 2 - lambda
// when the polynomial is a characteristic polynomial of a cycle Laplacian).

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cyclospec/errors.hpp"

namespace cyclospec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Integer polynomial stored ascending by degree. The top stored coefficient
/// is always nonzero; the zero polynomial stores nothing and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// The polynomial `a`.
  static IntPoly variable();

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of a^i; zero past the degree.
  [[nodiscard]] BigInt coeff(std::size_t i) const;
  /// Leading coefficient; throws ZeroPolynomialError on the zero polynomial.
  [[nodiscard]] const BigInt& leading() const;
  [[nodiscard]] bool is_monic() const noexcept;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);

  [[nodiscard]] IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human form, e.g. "a^3 - 3*a - 2".
  [[nodiscard]] std::string to_string(std::string_view var = "a") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPoly operator+(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(IntPoly lhs, const IntPoly& rhs);
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
IntPoly operator*(const BigInt& c, IntPoly p);
IntPoly operator+(IntPoly lhs, long c);
IntPoly operator-(IntPoly lhs, long c);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// p = q * quotient + remainder with deg(remainder) < deg(q).
/// Monic divisors take the synthetic-division path. Otherwise division runs
/// over the rationals and throws NonIntegralQuotient if either output is not
/// an integer polynomial.
DivRem divrem(const IntPoly& p, const IntPoly& q);

/// Exact quotient p / q; throws NonIntegralQuotient if q does not divide p.
IntPoly exact_quotient(const IntPoly& p, const IntPoly& q);

/// Remainder of lc(q)^(deg p - deg q + 1) * p divided by q.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

/// p(q(a)).
IntPoly compose(const IntPoly& p, const IntPoly& q);

BigInt eval(const IntPoly& p, const BigInt& x);
Rational eval(const IntPoly& p, const Rational& x);
double eval(const IntPoly& p, double x);
long double eval(const IntPoly& p, long double x);

IntPoly derivative(const IntPoly& p);

/// Gcd of the coefficients, sign taken from the leading coefficient. Zero for
/// the zero polynomial.
BigInt content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient. Throws ZeroPolynomialError when both inputs are zero.
IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q);

struct SquarefreeFactor {
  IntPoly factor;
  unsigned multiplicity = 0;
};

/// p == content * prod(factor_i ^ multiplicity_i); factors are primitive,
/// square-free, pairwise coprime, with positive leading coefficients and
/// listed by increasing multiplicity.
struct SquarefreeDecomposition {
  BigInt content;
  std::vector<SquarefreeFactor> factors;

  [[nodiscard]] IntPoly expand() const;
  /// Multiplicity of x as a root of the decomposed polynomial.
  [[nodiscard]] unsigned root_multiplicity(const Rational& x) const;
};

SquarefreeDecomposition squarefree_decomposition(const IntPoly& p);

/// Distinct real roots, ascending, each located to within `tol` by Sturm
/// sequence isolation and bisection on exact rationals.
std::vector<double> real_roots(const IntPoly& p, double tol = 1e-12);

/// Real roots repeated according to multiplicity, ascending.
std::vector<double> real_roots_with_multiplicity(const IntPoly& p, double tol = 1e-12);

}  // namespace cyclospec
