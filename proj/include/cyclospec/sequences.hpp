#pragma once

// The two polynomial families behind the cycle Laplacian.
//
//   path_poly(n)  = L_n, the determinant of the n x n tridiagonal matrix with
//                   diagonal a and off-diagonals -1:
//                   L_{-1} = 0, L_0 = 1, L_n = a L_{n-1} - L_{n-2}.
//   cycle_poly(n) = A_n = a L_{n-1} - 2 L_{n-2} - 2, the characteristic
//                   polynomial of the n-cycle Laplacian in a = 2 - lambda
//                   (for n >= 3; A_1 and A_2 are formal members only).
//
// Each check_* function verifies one identity at one parameter tuple by exact
// polynomial comparison and returns a VerificationReport.

#include <deque>
#include <string>
#include <vector>

#include "cyclospec/polyalg.hpp"
#include "cyclospec/report.hpp"

namespace cyclospec {

/// Append-only memo of L_n and A_n. Not synchronized: confine an instance to
/// one thread, or guard it externally.
class SequenceCache {
 public:
  SequenceCache();

  /// L_n for n >= -1; throws RangeError otherwise.
  const IntPoly& path_poly(long n);
  /// A_n for n >= 1; throws RangeError otherwise.
  const IntPoly& cycle_poly(long n);

 private:
  // deque: references handed out stay valid while the cache grows.
  std::deque<IntPoly> path_;   // path_[n + 1] = L_n
  std::deque<IntPoly> cycle_;  // cycle_[n - 1] = A_n
};

IntPoly path_poly(long n);
IntPoly cycle_poly(long n);

/// A_n built from A_1 = a - 2, A_2 = a^2 - 4 and
/// A_n = a A_{n-1} - A_{n-2} + 2 A_1, independently of L_n.
IntPoly cycle_poly_three_term(long n);

VerificationReport check_path_product(SequenceCache& cache, long n, long k);
VerificationReport check_path_square(SequenceCache& cache, long n);
VerificationReport check_three_term(SequenceCache& cache, long n);
VerificationReport check_doubling(SequenceCache& cache, long n);
VerificationReport check_divisibility(SequenceCache& cache, long n, long k);
VerificationReport check_addition(SequenceCache& cache, long n, long p);
VerificationReport check_shifted_addition(SequenceCache& cache, long k, long n, long p);
VerificationReport check_composition(SequenceCache& cache, long k, long n);

enum class SequenceKind { Path, Cycle };

struct CoefficientTable {
  SequenceKind kind;
  std::vector<long> indices;              // row n
  std::vector<std::vector<BigInt>> rows;  // ascending coefficients, zero padded
  std::size_t width = 0;

  [[nodiscard]] std::string label(std::size_t row) const;
  /// Rows separated by newlines, cells by tabs, label first.
  [[nodiscard]] std::string to_tsv() const;
};

/// Rows 1..max_n for L, 3..max_n for A, each padded to max_n + 1 columns.
CoefficientTable coefficient_table(SequenceKind kind, long max_n);

}  // namespace cyclospec
