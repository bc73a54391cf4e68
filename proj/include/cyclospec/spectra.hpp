#pragma once

// Spectra of cycle Laplacians, tracked exactly through rotation indices.
//
// The n-cycle has eigenvalues 2 - 2cos(2*pi*k/n) = 4 sin^2(pi*k/n). The
// fraction x = k/n mod 1 is its rotation; x and 1 - x give the same
// eigenvalue, so rotations are compared after folding into [0, 1/2], where
// the map x -> 4 sin^2(pi x) is strictly increasing. Every theorem check in
// this module decides eigenvalue equality on folded rotations, never on
// floats.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclospec/cayley.hpp"
#include "cyclospec/report.hpp"
#include "cyclospec/sequences.hpp"

namespace cyclospec {

/// Reduced fraction num/den in [0, 1).
class Rotation {
 public:
  Rotation() = default;
  Rotation(std::int64_t num, std::int64_t den);

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }

  /// min(x, 1 - x), in [0, 1/2].
  [[nodiscard]] Rotation folded() const;
  /// m * x mod 1.
  [[nodiscard]] Rotation times(std::int64_t m) const;
  /// 4 sin^2(pi x).
  [[nodiscard]] double lambda() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Rotation&, const Rotation&) = default;
  friend std::strong_ordering operator<=>(const Rotation& x, const Rotation& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Eigenvalue identity: same folded rotation.
inline bool same_eigenvalue(const Rotation& x, const Rotation& y) { return x.folded() == y.folded(); }

struct CycleEigenvalue {
  long index;
  Rotation rotation;  // reduced k/n
  double lambda;
};

struct CycleSpectrum {
  long n = 0;
  std::vector<CycleEigenvalue> entries;

  /// Folded rotation -> multiplicity, ascending by eigenvalue.
  [[nodiscard]] std::map<Rotation, int> multiplicities() const;
  [[nodiscard]] bool contains(const Rotation& x) const;
  [[nodiscard]] int multiplicity_of(const Rotation& x) const;
};

/// Spectrum of the actual Cayley-graph Laplacian of Z_n. For n >= 3 this is
/// the circulant spectrum k/n. Z_1 is a single vertex ({0}) and Z_2 a single
/// edge ({0, 2}); its eigenvalue 2 carries rotation 1/4.
CycleSpectrum cycle_spectrum(long n);

/// Spectrum reached by the roots of A_n under lambda = 2 - a: rotations k/n
/// for every n >= 1, including the formal n = 1, 2 cases.
CycleSpectrum formal_cycle_spectrum(long n);

/// Number of k in [0, n) whose rotation k/n folds onto the folded `x`.
int multiplicity(long n, const Rotation& x);

/// P_m(lambda) = -A_m(2 - lambda).
double spectral_map(long m, double lambda);
double spectral_map(SequenceCache& cache, long m, double lambda);
/// Exact form: x -> m x mod 1, folded.
Rotation spectral_map(long m, const Rotation& x);

VerificationReport check_subgroup_closure(long n, long k);
VerificationReport check_gcd_theorem(long n, long m);
VerificationReport check_lambda2_lambda4(long n);
VerificationReport check_interval(long n);
VerificationReport check_spectral_map_closure(SequenceCache& cache, long n, long m);
VerificationReport check_iff_corollary(SequenceCache& cache, long n, long k);

/// Numeric eigenvalue multiset, merged at a tolerance.
struct SpectrumMultiset {
  std::vector<std::pair<double, int>> values;  // ascending (lambda, multiplicity)

  static SpectrumMultiset from_eigenvalues(std::vector<double> eig, double tol = 1e-9);
  [[nodiscard]] long vertex_count() const;
  [[nodiscard]] std::vector<double> expanded() const;
  [[nodiscard]] bool contains(double lambda, double tol = 1e-9) const;
};

/// Entrywise comparison of the expanded, sorted multisets.
bool spectra_equal(const SpectrumMultiset& x, const SpectrumMultiset& y, double tol = 1e-9);

/// Laplacian spectrum of the complement of an n-vertex graph: one zero is
/// kept, every other eigenvalue lambda becomes n - lambda. Throws
/// std::invalid_argument if `s` has no zero eigenvalue or the wrong size.
SpectrumMultiset complement_spectrum(const SpectrumMultiset& s, long n);

SpectrumMultiset numeric_spectrum(const Graph& g);

struct SpectrumComparison {
  bool equal = false;
  /// Smallest eigenvalue over-represented in the group with more cyclic factors
  /// (the second one on a tie), else in the other; empty when equal.
  std::optional<double> witness;
  /// Eigenvalues with a higher multiplicity in one spectrum than the other.
  std::vector<double> only_in_first;
  std::vector<double> only_in_second;
  SpectrumMultiset first;
  SpectrumMultiset second;
};

/// Throws OrderMismatchError if the groups have different orders.
SpectrumComparison compare_group_spectra(const CayleySpec& g1, const CayleySpec& g2, double tol = 1e-9);

/// Z2xZ3 vs Z6 and Z2xZ2 vs Z4 worked examples.
VerificationReport check_complement_example();

}  // namespace cyclospec
