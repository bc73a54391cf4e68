#include "cyclospec/polyalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cyclospec {

namespace {

using RatCoeffs = std::vector<Rational>;

void trim(RatCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Long division over Q. Both outputs are canonical (no trailing zeros).
std::pair<RatCoeffs, RatCoeffs> rational_divrem(const IntPoly& p, const IntPoly& q) {
  RatCoeffs rem(p.coeffs().begin(), p.coeffs().end());
  const long dq = q.degree();
  const Rational lc(q.leading());
  RatCoeffs quo;
  if (p.degree() >= dq) quo.assign(static_cast<std::size_t>(p.degree() - dq + 1), Rational(0));
  for (long d = p.degree(); d >= dq; --d) {
    const auto top = static_cast<std::size_t>(d);
    if (rem[top] == 0) continue;
    Rational factor = rem[top] / lc;
    const auto shift = static_cast<std::size_t>(d - dq);
    quo[shift] = factor;
    for (long i = 0; i <= dq; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      rem[shift + ui] -= factor * q.coeffs()[ui];
    }
  }
  trim(quo);
  trim(rem);
  return {std::move(quo), std::move(rem)};
}

IntPoly to_integral(const RatCoeffs& c) {
  std::vector<BigInt> out;
  out.reserve(c.size());
  for (const auto& r : c) {
    if (r.get_den() != 1) throw NonIntegralQuotient();
    out.emplace_back(r.get_num());
  }
  return IntPoly(std::move(out));
}

DivRem monic_divrem(const IntPoly& p, const IntPoly& q) {
  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  const long dq = q.degree();
  std::vector<BigInt> quo(static_cast<std::size_t>(p.degree() - dq + 1));
  for (long d = p.degree(); d >= dq; --d) {
    const auto top = static_cast<std::size_t>(d);
    if (rem[top] == 0) continue;
    const BigInt factor = rem[top];
    const auto shift = static_cast<std::size_t>(d - dq);
    quo[shift] = factor;
    for (long i = 0; i <= dq; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      rem[shift + ui] -= factor * q.coeffs()[ui];
    }
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

template <typename T, typename Convert>
T horner(const IntPoly& p, const T& x, Convert convert) {
  T acc(0);
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + convert(*it);
  return acc;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool IntPoly::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::string IntPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  IntPoly out = lhs;
  out *= rhs;
  return out;
}
IntPoly operator*(const BigInt& c, IntPoly p) { return p *= c; }
IntPoly operator+(IntPoly lhs, long c) { return lhs += IntPoly::constant(c); }
IntPoly operator-(IntPoly lhs, long c) { return lhs -= IntPoly::constant(c); }

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

DivRem divrem(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DivisionByZeroPolynomial();
  if (p.degree() < q.degree()) return {IntPoly(), p};
  if (q.is_monic()) return monic_divrem(p, q);
  auto [quo, rem] = rational_divrem(p, q);
  return {to_integral(quo), to_integral(rem)};
}

IntPoly exact_quotient(const IntPoly& p, const IntPoly& q) {
  auto [quo, rem] = divrem(p, q);
  if (!rem.is_zero()) throw NonIntegralQuotient();
  return quo;
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DivisionByZeroPolynomial();
  if (p.degree() < q.degree()) return p;
  const long dq = q.degree();
  const BigInt& lc = q.leading();
  long steps_left = p.degree() - dq + 1;
  IntPoly r = p;
  while (!r.is_zero() && r.degree() >= dq) {
    IntPoly sub = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - dq)) * q;
    r *= lc;
    r -= sub;
    --steps_left;
  }
  for (; steps_left > 0; --steps_left) r *= lc;
  return r;
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
  IntPoly acc;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= q;
    acc += IntPoly::constant(*it);
  }
  return acc;
}

BigInt eval(const IntPoly& p, const BigInt& x) {
  return horner(p, x, [](const BigInt& c) { return c; });
}

Rational eval(const IntPoly& p, const Rational& x) {
  return horner(p, x, [](const BigInt& c) { return Rational(c); });
}

double eval(const IntPoly& p, double x) {
  return horner(p, x, [](const BigInt& c) { return c.get_d(); });
}

long double eval(const IntPoly& p, long double x) {
  return horner(p, x, [](const BigInt& c) { return static_cast<long double>(c.get_d()); });
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

BigInt content(const IntPoly& p) {
  if (p.is_zero()) return 0;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.leading() < 0) g = -g;
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  const BigInt c = content(p);
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw ZeroPolynomialError("gcd of two zero polynomials");
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  // primitive_part already fixed the sign to a positive leading coefficient.
  return a;
}

IntPoly SquarefreeDecomposition::expand() const {
  IntPoly out = IntPoly::constant(content);
  for (const auto& [f, m] : factors)
    for (unsigned i = 0; i < m; ++i) out *= f;
  return out;
}

unsigned SquarefreeDecomposition::root_multiplicity(const Rational& x) const {
  unsigned total = 0;
  for (const auto& [f, m] : factors)
    if (eval(f, x) == 0) total += m;
  return total;
}

// Yun's algorithm on the primitive part. Every division below is exact over Q
// by a primitive divisor, hence integral by Gauss's lemma.
SquarefreeDecomposition squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("square-free decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  out.content = content(p);
  IntPoly prim = primitive_part(p);
  if (prim.degree() == 0) return out;

  const IntPoly dprim = derivative(prim);
  const IntPoly g = gcd_primitive(prim, dprim);
  IntPoly b = exact_quotient(prim, g);
  IntPoly c = exact_quotient(dprim, g);
  IntPoly d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    IntPoly factor = gcd_primitive(b, d);
    b = exact_quotient(b, factor);
    c = exact_quotient(d, factor);
    d = c - derivative(b);
    if (factor.degree() > 0) out.factors.push_back({std::move(factor), i});
  }
  return out;
}

}  // namespace cyclospec
