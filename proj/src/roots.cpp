#include <algorithm>
#include <cmath>

#include "cyclospec/polyalg.hpp"

namespace cyclospec {

namespace {

// Sturm chain s0 = p, s1 = p', s_{i+1} = -rem(s_{i-1}, s_i). Each member is
// rescaled by a positive constant only, which preserves sign variations.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{primitive_part(p)};
  IntPoly dp = derivative(chain.front());
  if (dp.is_zero()) return chain;
  chain.push_back(primitive_part(dp));
  while (true) {
    const IntPoly& prev = chain[chain.size() - 2];
    const IntPoly& cur = chain.back();
    IntPoly r = pseudo_remainder(prev, cur);
    if (r.is_zero()) break;
    // prem multiplies by lc(cur)^(deg prev - deg cur + 1); undo a negative sign.
    const long power = prev.degree() - cur.degree() + 1;
    if (cur.leading() < 0 && power % 2 != 0) r = -r;
    r = -r;
    BigInt c = abs(content(r));
    std::vector<BigInt> scaled(r.coeffs().begin(), r.coeffs().end());
    for (auto& x : scaled) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    chain.emplace_back(std::move(scaled));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = sgn(eval(s, x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

struct Bracket {
  Rational lo;
  Rational hi;
  int v_lo;
  int v_hi;
};

}  // namespace

std::vector<double> real_roots(const IntPoly& p, double tol) {
  if (p.is_zero()) throw ZeroPolynomialError("real roots of the zero polynomial");
  if (p.degree() == 0) return {};
  const IntPoly sqf = exact_quotient(primitive_part(p), gcd_primitive(p, derivative(p)));
  const auto chain = sturm_chain(sqf);

  // Cauchy bound: every root satisfies |x| < 1 + max|c_i / lc|.
  Rational bound(0);
  const Rational lc(abs(sqf.leading()));
  for (long i = 0; i < sqf.degree(); ++i) {
    Rational ratio(abs(sqf.coeffs()[static_cast<std::size_t>(i)]));
    ratio /= lc;
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  std::vector<double> roots;
  std::vector<Bracket> work{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
  const Rational width_tol(tol);
  while (!work.empty()) {
    Bracket b = work.back();
    work.pop_back();
    const int count = b.v_lo - b.v_hi;  // roots in (lo, hi]
    if (count == 0) continue;
    if (count == 1) {
      while (b.hi - b.lo > width_tol) {
        Rational mid = (b.lo + b.hi) / 2;
        const int v_mid = sign_variations(chain, mid);
        if (b.v_lo - v_mid == 1) {
          b.hi = mid;
          b.v_hi = v_mid;
        } else {
          b.lo = mid;
          b.v_lo = v_mid;
        }
      }
      // A root sitting exactly on hi is the best estimate available.
      if (eval(sqf, b.hi) == 0)
        roots.push_back(b.hi.get_d());
      else
        roots.push_back(Rational((b.lo + b.hi) / 2).get_d());
      continue;
    }
    Rational mid = (b.lo + b.hi) / 2;
    const int v_mid = sign_variations(chain, mid);
    work.push_back({b.lo, mid, b.v_lo, v_mid});
    work.push_back({mid, b.hi, v_mid, b.v_hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> real_roots_with_multiplicity(const IntPoly& p, double tol) {
  std::vector<double> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p).factors)
    for (double r : real_roots(factor, tol)) out.insert(out.end(), mult, r);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclospec
