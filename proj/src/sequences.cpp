#include "cyclospec/sequences.hpp"

#include <sstream>

namespace cyclospec {

namespace {

const IntPoly kA = IntPoly::variable();

std::string range_message(const char* what, long value) {
  return std::string(what) + " out of range: " + std::to_string(value);
}

void require(bool ok, const char* what, long value) {
  if (!ok) throw RangeError(range_message(what, value));
}

}  // namespace

SequenceCache::SequenceCache() : path_{IntPoly(), IntPoly{1}} {}

const IntPoly& SequenceCache::path_poly(long n) {
  require(n >= -1, "L index", n);
  const auto idx = static_cast<std::size_t>(n + 1);
  while (path_.size() <= idx) {
    const std::size_t m = path_.size();
    path_.push_back(kA * path_[m - 1] - path_[m - 2]);
  }
  return path_[idx];
}

const IntPoly& SequenceCache::cycle_poly(long n) {
  require(n >= 1, "A index", n);
  const auto idx = static_cast<std::size_t>(n - 1);
  while (cycle_.size() <= idx) {
    const long m = static_cast<long>(cycle_.size()) + 1;
    IntPoly next = kA * path_poly(m - 1);
    next -= IntPoly::constant(2) * path_poly(m - 2);
    cycle_.push_back(next - 2);
  }
  return cycle_[idx];
}

IntPoly path_poly(long n) {
  SequenceCache cache;
  return cache.path_poly(n);
}

IntPoly cycle_poly(long n) {
  SequenceCache cache;
  return cache.cycle_poly(n);
}

IntPoly cycle_poly_three_term(long n) {
  require(n >= 1, "A index", n);
  const IntPoly a1{-2, 1};
  IntPoly prev = a1;
  if (n == 1) return prev;
  IntPoly cur{-4, 0, 1};
  const IntPoly shift = IntPoly::constant(2) * a1;
  for (long m = 3; m <= n; ++m) {
    IntPoly next = kA * cur - prev + shift;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

VerificationReport check_path_product(SequenceCache& c, long n, long k) {
  require(k >= 1 && k <= n, "L-product k", k);
  const IntPoly rhs = c.path_poly(n - k) * c.path_poly(k) - c.path_poly(n - k - 1) * c.path_poly(k - 1);
  return compare_polys("l-product", {n, k}, c.path_poly(n), rhs, "L_n vs L_{n-k}L_k - L_{n-k-1}L_{k-1}");
}

VerificationReport check_path_square(SequenceCache& c, long n) {
  require(n >= 2, "L-square n", n);
  const IntPoly& l1 = c.path_poly(n - 1);
  const IntPoly& l2 = c.path_poly(n - 2);
  const IntPoly sq = l1 * l1;
  auto square = compare_polys("l-square", {n}, sq, l2 * c.path_poly(n) + 1, "L_{n-1}^2 vs L_{n-2}L_n + 1");
  if (!square.passed) return square;
  return compare_polys("l-square", {n}, sq + l2 * l2 - 1, kA * l1 * l2,
                       "L_{n-1}^2 + L_{n-2}^2 - 1 vs a L_{n-1} L_{n-2}");
}

VerificationReport check_three_term(SequenceCache& c, long n) {
  require(n >= 1, "three-term n", n);
  const IntPoly& direct = c.cycle_poly(n);
  auto rec = compare_polys("three-term", {n}, direct, cycle_poly_three_term(n), "A_n vs three-term recurrence");
  if (!rec.passed) return rec;
  return compare_polys("three-term", {n}, direct, c.path_poly(n) - c.path_poly(n - 2) - 2, "A_n vs L_n - L_{n-2} - 2");
}

VerificationReport check_doubling(SequenceCache& c, long n) {
  require(n >= 1, "doubling n", n);
  const IntPoly& an = c.cycle_poly(n);
  return compare_polys("doubling", {n}, c.cycle_poly(2 * n), an * (an + 4), "A_{2n} vs A_n(A_n + 4)");
}

VerificationReport check_divisibility(SequenceCache& c, long n, long k) {
  require(n >= 1, "divisibility n", n);
  require(k >= 1, "divisibility k", k);
  const IntPoly& an = c.cycle_poly(n);
  const IntPoly& akn = c.cycle_poly(k * n);
  IntPoly rem = divrem(akn, an).remainder;
  if (!rem.is_zero()) {
    return VerificationReport::fail("divisibility", {n, k},
                                    {{n, k}, rem, IntPoly(), "remainder of A_{kn} by A_n is nonzero"});
  }
  if (k < 2) return VerificationReport::pass("divisibility", {n, k});
  // A_{kn} = (A_n + 2) A_{(k-1)n} + 2 A_n - A_{(k-2)n}, with A_0 = 0.
  IntPoly step = (an + 2) * c.cycle_poly((k - 1) * n) + IntPoly::constant(2) * an;
  if (k > 2) step -= c.cycle_poly((k - 2) * n);
  return compare_polys("divisibility", {n, k}, akn, step, "A_{kn} vs (A_n + 2)A_{(k-1)n} + 2A_n - A_{(k-2)n}");
}

VerificationReport check_addition(SequenceCache& c, long n, long p) {
  require(n >= 2, "addition n", n);
  require(p >= 1 && p < n, "addition p", p);
  const IntPoly& ap = c.cycle_poly(p);
  const IntPoly rhs = c.cycle_poly(n) * (ap + 2) + IntPoly::constant(2) * ap - c.cycle_poly(n - p);
  return compare_polys("addition", {n, p}, c.cycle_poly(n + p), rhs, "A_{n+p} vs A_n(A_p + 2) + 2A_p - A_{n-p}");
}

VerificationReport check_shifted_addition(SequenceCache& c, long k, long n, long p) {
  require(k >= 1, "shifted-addition k", k);
  require(n >= 2, "shifted-addition n", n);
  require(p >= 1 && p < n, "shifted-addition p", p);
  require(k * n - p >= 1, "shifted-addition kn - p", k * n - p);
  const IntPoly& ap = c.cycle_poly(p);
  const IntPoly rhs = (ap + 2) * c.cycle_poly(k * n) + IntPoly::constant(2) * ap - c.cycle_poly(k * n - p);
  return compare_polys("shifted-addition", {k, n, p}, c.cycle_poly(k * n + p), rhs,
                       "A_{kn+p} vs (A_p + 2)A_{kn} + 2A_p - A_{kn-p}");
}

VerificationReport check_composition(SequenceCache& c, long k, long n) {
  require(k >= 1, "composition k", k);
  require(n >= 1, "composition n", n);
  return compare_polys("composition", {k, n}, c.cycle_poly(k * n), compose(c.cycle_poly(k), c.cycle_poly(n) + 2),
                       "A_{kn} vs A_k(A_n + 2)");
}

std::string CoefficientTable::label(std::size_t row) const {
  return std::string(kind == SequenceKind::Path ? "L_" : "A_") + std::to_string(indices.at(row));
}

std::string CoefficientTable::to_tsv() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << label(r);
    for (const auto& v : rows[r]) os << '\t' << v;
    os << '\n';
  }
  return os.str();
}

CoefficientTable coefficient_table(SequenceKind kind, long max_n) {
  const long first = kind == SequenceKind::Path ? 1 : 3;
  require(max_n >= first, "table max_n", max_n);
  SequenceCache cache;
  CoefficientTable t{kind, {}, {}, static_cast<std::size_t>(max_n + 1)};
  for (long n = first; n <= max_n; ++n) {
    const IntPoly& p = kind == SequenceKind::Path ? cache.path_poly(n) : cache.cycle_poly(n);
    std::vector<BigInt> row(t.width);
    for (std::size_t i = 0; i < t.width; ++i) row[i] = p.coeff(i);
    t.indices.push_back(n);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace cyclospec
