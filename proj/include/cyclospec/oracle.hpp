#pragma once

// Ground truth computed straight from a matrix, with no knowledge of the
// recurrences in sequences.hpp.

#include <vector>

#include "cyclospec/cayley.hpp"
#include "cyclospec/polyalg.hpp"

namespace cyclospec {

struct CharPoly {
  IntPoly in_lambda;  // det(lambda I - M), monic
  IntPoly in_a;       // (-1)^n det(lambda I - M) at lambda = 2 - a, monic in a
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// Exact characteristic polynomial: det(xI - M) at the n + 1 points
/// 0, 1, -1, 2, -2, ... followed by Newton interpolation over Q.
CharPoly charpoly_exact(const IntMatrix& m);

/// Ascending eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm drops below `tol`.
/// Throws NonSymmetricError or NonConvergenceError.
std::vector<double> eig_numeric(const IntMatrix& m, double tol = 1e-12);

}  // namespace cyclospec
