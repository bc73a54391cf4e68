#pragma once

// Named verification sweeps. Each identity id maps to a parameter grid built
// from upper bounds; the grid is checked in parallel and merged, in grid
// order, into one report.

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "cyclospec/report.hpp"

namespace cyclospec {

class UnknownIdentityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Upper bounds of a sweep; unset fields take the identity's default.
struct SweepBounds {
  std::optional<long> n;
  std::optional<long> k;
  std::optional<long> m;
};

struct IdentityInfo {
  std::string_view id;
  std::string_view statement;
  std::string_view bounds;  // flags the sweep reads, with defaults
};

std::span<const IdentityInfo> identity_catalog();

/// CYCLOSPEC_THREADS if set to a positive integer, else the hardware count.
unsigned default_thread_count();

/// Throws UnknownIdentityError for an unknown id and RangeError when a bound
/// is below the identity's minimum.
VerificationReport run_verification(std::string_view id, const SweepBounds& bounds,
                                    unsigned threads = default_thread_count());

/// Exact determinant characteristic polynomial of the n-cycle Laplacian
/// against A_n from the recurrence (n >= 3).
VerificationReport check_oracle_equivalence(long n);

}  // namespace cyclospec
