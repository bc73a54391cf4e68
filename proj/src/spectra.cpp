#include "cyclospec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "cyclospec/oracle.hpp"

namespace cyclospec {

namespace {

constexpr double kNumericTol = 1e-9;

const Rotation kLambdaTwo(1, 4);
const Rotation kLambdaFour(1, 2);

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Rotation::Rotation(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("rotation denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rotation Rotation::folded() const {
  if (2 * num_ <= den_) return *this;
  return Rotation(den_ - num_, den_);
}

Rotation Rotation::times(std::int64_t m) const { return Rotation((m % den_) * num_, den_); }

double Rotation::lambda() const {
  // The only rational eigenvalues (denominators 1, 2, 3, 4, 6) are returned exactly.
  const Rotation f = folded();
  switch (f.den_) {
    case 1: return 0.0;
    case 2: return 4.0;
    case 3: return 3.0;
    case 4: return 2.0;
    case 6: return 1.0;
    default: break;
  }
  const double s = std::sin(std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
  return 4.0 * s * s;
}

std::string Rotation::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Rotation& x, const Rotation& y) {
  // Denominators stay far below 2^31 here, so the cross products fit.
  return x.num_ * y.den_ <=> y.num_ * x.den_;
}

std::map<Rotation, int> CycleSpectrum::multiplicities() const {
  std::map<Rotation, int> out;
  for (const auto& e : entries) ++out[e.rotation.folded()];
  return out;
}

bool CycleSpectrum::contains(const Rotation& x) const { return multiplicity_of(x) > 0; }

int CycleSpectrum::multiplicity_of(const Rotation& x) const {
  const Rotation f = x.folded();
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.rotation.folded() == f; }));
}

CycleSpectrum formal_cycle_spectrum(long n) {
  require(n >= 1, "cycle order must be >= 1, got " + std::to_string(n));
  CycleSpectrum s{n, {}};
  s.entries.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    Rotation r(k, n);
    s.entries.push_back({k, r, r.folded().lambda()});
  }
  return s;
}

CycleSpectrum cycle_spectrum(long n) {
  require(n >= 1, "cycle order must be >= 1, got " + std::to_string(n));
  if (n == 2) return {2, {{0, Rotation(0, 1), 0.0}, {1, kLambdaTwo, 2.0}}};
  return formal_cycle_spectrum(n);
}

int multiplicity(long n, const Rotation& x) {
  require(n >= 3, "multiplicity needs n >= 3, got " + std::to_string(n));
  return formal_cycle_spectrum(n).multiplicity_of(x);
}

double spectral_map(SequenceCache& cache, long m, double lambda) {
  require(m >= 1, "spectral map index must be >= 1");
  return static_cast<double>(-eval(cache.cycle_poly(m), 2.0L - static_cast<long double>(lambda)));
}

double spectral_map(long m, double lambda) {
  SequenceCache cache;
  return spectral_map(cache, m, lambda);
}

Rotation spectral_map(long m, const Rotation& x) {
  require(m >= 1, "spectral map index must be >= 1");
  return x.times(m).folded();
}

VerificationReport check_subgroup_closure(long n, long k) {
  require(n >= 3 && k >= 1, "subgroup closure needs n >= 3, k >= 1");
  const auto small = cycle_spectrum(n).multiplicities();
  const auto big = cycle_spectrum(k * n);
  for (const auto& [rot, mult] : small) {
    const int big_mult = big.multiplicity_of(rot);
    if (big_mult != mult) {
      return VerificationReport::fail(
          "subgroup", {n, k},
          {{n, k}, {}, {},
           "rotation " + rot.to_string() + " has multiplicity " + std::to_string(mult) + " in Z_n but " +
               std::to_string(big_mult) + " in Z_kn"});
    }
  }
  return VerificationReport::pass("subgroup", {n, k});
}

VerificationReport check_gcd_theorem(long n, long m) {
  require(n >= 3 && m >= 3, "gcd theorem needs n, m >= 3");
  const long d = std::gcd(n, m);
  const auto sn = cycle_spectrum(n);
  const auto sm = cycle_spectrum(m);
  // Roots of A_d; for d <= 2 these differ from the spectrum of the actual
  // one- and two-vertex Laplacians.
  const auto sd = formal_cycle_spectrum(d);
  const auto true_d = cycle_spectrum(d);
  auto report = VerificationReport::pass("gcd", {n, m});
  for (const auto& [rot, mult] : sn.multiplicities()) {
    if (!sm.contains(rot)) continue;
    const bool in_d = sd.contains(rot);
    if (rot == kLambdaTwo) {
      if (!in_d) report.notes.push_back("lambda=2 shared by Z_n, Z_m but absent from Z_gcd");
      continue;
    }
    if (!in_d) {
      return VerificationReport::fail("gcd", {n, m},
                                      {{n, m}, {}, {},
                                       "shared rotation " + rot.to_string() + " is not a root rotation of A_" +
                                           std::to_string(d)});
    }
    if (!true_d.contains(rot))
      report.notes.push_back("gcd <= 2: shared eigenvalue is a root of A_gcd but not of the Z_gcd Laplacian");
  }
  return report;
}

VerificationReport check_lambda2_lambda4(long n) {
  require(n >= 2, "lambda 2/4 characterization needs n >= 2");
  const auto s = cycle_spectrum(n);
  const int m4 = s.multiplicity_of(kLambdaFour);
  const int m2 = s.multiplicity_of(kLambdaTwo);
  const int want4 = (n % 2 == 0 && n >= 4) ? 1 : 0;
  const int want2 = n % 4 == 0 ? 2 : (n == 2 ? 1 : 0);
  if (m4 == want4 && m2 == want2) return VerificationReport::pass("lambda24", {n});
  return VerificationReport::fail("lambda24", {n},
                                  {{n}, {}, {},
                                   "multiplicity of 4 is " + std::to_string(m4) + " (expected " +
                                       std::to_string(want4) + "), of 2 is " + std::to_string(m2) +
                                       " (expected " + std::to_string(want2) + ")"});
}

VerificationReport check_interval(long n) {
  require(n >= 1, "interval check needs n >= 1");
  for (const auto& e : cycle_spectrum(n).entries) {
    const Rotation f = e.rotation.folded();
    const bool exact_ok = f.num() >= 0 && 2 * f.num() <= f.den();
    const bool float_ok = e.lambda >= 0.0 && e.lambda <= 4.0;
    if (!exact_ok || !float_ok)
      return VerificationReport::fail("interval", {n},
                                      {{n}, {}, {}, "eigenvalue " + fmt_double(e.lambda) + " outside [0, 4]"});
  }
  return VerificationReport::pass("interval", {n});
}

VerificationReport check_spectral_map_closure(SequenceCache& cache, long n, long m) {
  require(n >= 3 && m >= 1, "spectral-map closure needs n >= 3, m >= 1");
  const auto s = cycle_spectrum(n);
  for (const auto& e : s.entries) {
    const Rotation image = spectral_map(m, e.rotation);
    if (!s.contains(image))
      return VerificationReport::fail("spectral-map", {n, m},
                                      {{n, m}, {}, {},
                                       "rotation " + e.rotation.to_string() + " maps to " + image.to_string() +
                                           ", not in the spectrum"});
    const double numeric = spectral_map(cache, m, e.lambda);
    if (std::abs(numeric - image.lambda()) > kNumericTol)
      return VerificationReport::fail("spectral-map", {n, m},
                                      {{n, m}, {}, {},
                                       "P_m(" + fmt_double(e.lambda) + ") = " + fmt_double(numeric) +
                                           " differs from " + fmt_double(image.lambda())});
  }
  return VerificationReport::pass("spectral-map", {n, m});
}

// Both directions are tested over every rotation u / (q k n), q = 1..4, so
// the reverse direction also sees non-eigenvalues of Z_kn (lambda = 2 for
// instance).
VerificationReport check_iff_corollary(SequenceCache& cache, long n, long k) {
  require(n >= 3 && k >= 1, "iff corollary needs n >= 3, k >= 1");
  const auto sn = cycle_spectrum(n);
  const auto skn = cycle_spectrum(k * n);
  for (long q = 1; q <= 4; ++q) {
    const long den = q * k * n;
    for (long u = 0; u < den; ++u) {
      const Rotation x(u, den);
      const Rotation image = spectral_map(k, x);
      const bool in_big = skn.contains(x);
      const bool maps_in = sn.contains(image);
      if (in_big != maps_in)
        return VerificationReport::fail("iff", {n, k},
                                        {{n, k}, {}, {},
                                         "rotation " + x.to_string() + (in_big ? " is" : " is not") +
                                             " in spec(Z_kn) but its image " + image.to_string() +
                                             (maps_in ? " is" : " is not") + " in spec(Z_n)"});
      if (in_big) {
        const double numeric = spectral_map(cache, k, x.folded().lambda());
        if (std::abs(numeric - image.lambda()) > kNumericTol)
          return VerificationReport::fail("iff", {n, k},
                                          {{n, k}, {}, {},
                                           "numeric P_k image " + fmt_double(numeric) + " differs from " +
                                               fmt_double(image.lambda())});
      }
    }
  }
  return VerificationReport::pass("iff", {n, k});
}

SpectrumMultiset SpectrumMultiset::from_eigenvalues(std::vector<double> eig, double tol) {
  std::sort(eig.begin(), eig.end());
  SpectrumMultiset s;
  double group_sum = 0.0;
  for (double v : eig) {
    if (!s.values.empty() && std::abs(v - s.values.back().first) <= tol) {
      group_sum += v;
      auto& [mean, mult] = s.values.back();
      ++mult;
      mean = group_sum / mult;
    } else {
      s.values.emplace_back(v, 1);
      group_sum = v;
    }
  }
  return s;
}

long SpectrumMultiset::vertex_count() const {
  long total = 0;
  for (const auto& [v, m] : values) total += m;
  return total;
}

std::vector<double> SpectrumMultiset::expanded() const {
  std::vector<double> out;
  for (const auto& [v, m] : values) out.insert(out.end(), static_cast<std::size_t>(m), v);
  return out;
}

bool SpectrumMultiset::contains(double lambda, double tol) const {
  return std::any_of(values.begin(), values.end(), [&](const auto& e) { return std::abs(e.first - lambda) <= tol; });
}

bool spectra_equal(const SpectrumMultiset& x, const SpectrumMultiset& y, double tol) {
  const auto ex = x.expanded();
  const auto ey = y.expanded();
  if (ex.size() != ey.size()) return false;
  for (std::size_t i = 0; i < ex.size(); ++i)
    if (std::abs(ex[i] - ey[i]) > tol) return false;
  return true;
}

SpectrumMultiset complement_spectrum(const SpectrumMultiset& s, long n) {
  if (s.vertex_count() != n)
    throw std::invalid_argument("spectrum has " + std::to_string(s.vertex_count()) + " eigenvalues, expected " +
                                std::to_string(n));
  if (s.values.empty() || std::abs(s.values.front().first) > kNumericTol)
    throw std::invalid_argument("a Laplacian spectrum must contain the eigenvalue 0");
  std::vector<double> eig = s.expanded();
  std::vector<double> out{0.0};
  for (std::size_t i = 1; i < eig.size(); ++i) out.push_back(static_cast<double>(n) - eig[i]);
  return SpectrumMultiset::from_eigenvalues(std::move(out));
}

SpectrumMultiset numeric_spectrum(const Graph& g) {
  return SpectrumMultiset::from_eigenvalues(eig_numeric(laplacian_of(g)));
}

SpectrumComparison compare_group_spectra(const CayleySpec& g1, const CayleySpec& g2, double tol) {
  if (g1.group.order() != g2.group.order())
    throw OrderMismatchError("group orders differ: " + std::to_string(g1.group.order()) + " vs " +
                             std::to_string(g2.group.order()));
  SpectrumComparison c;
  c.first = numeric_spectrum(g1.graph());
  c.second = numeric_spectrum(g2.graph());
  c.equal = spectra_equal(c.first, c.second, tol);

  auto mult_in = [tol](const SpectrumMultiset& s, double v) {
    for (const auto& [x, m] : s.values)
      if (std::abs(x - v) <= tol) return m;
    return 0;
  };
  for (const auto& [v, m] : c.first.values)
    if (m > mult_in(c.second, v)) c.only_in_first.push_back(v);
  for (const auto& [v, m] : c.second.values)
    if (m > mult_in(c.first, v)) c.only_in_second.push_back(v);
  if (!c.equal) {
    // Take the witness from the group with more cyclic factors, so the answer
    // does not depend on argument order; ties go to the second argument.
    const bool from_first = g1.group.orders().size() > g2.group.orders().size();
    const auto& preferred = from_first ? c.only_in_first : c.only_in_second;
    const auto& other = from_first ? c.only_in_second : c.only_in_first;
    if (!preferred.empty())
      c.witness = preferred.front();
    else if (!other.empty())
      c.witness = other.front();
  }
  return c;
}

VerificationReport check_complement_example() {
  const std::string id = "complement-example";
  auto fail = [&](const std::string& why) { return VerificationReport::fail(id, {}, {{}, {}, {}, why}); };

  const auto z6 = parse_group_spec("Z6");
  const auto z2z3 = parse_group_spec("Z2xZ3");
  const auto s6 = numeric_spectrum(z6.graph());
  const auto s23 = numeric_spectrum(z2z3.graph());
  if (!s23.contains(2.0)) return fail("2 is not an eigenvalue of Z2xZ3");
  if (s6.contains(2.0)) return fail("2 is an eigenvalue of Z6");
  if (!spectra_equal(s23, complement_spectrum(s6, 6))) return fail("spec(Z2xZ3) differs from the complement rule");
  if (!isomorphic_small(complement(z6.graph()), z2z3.graph()))
    return fail("complement of the 6-cycle is not isomorphic to the Z2xZ3 Cayley graph");
  const auto cmp = compare_group_spectra(z6, z2z3);
  if (cmp.equal || !cmp.witness || std::abs(*cmp.witness - 2.0) > kNumericTol)
    return fail("Z6 vs Z2xZ3 comparison did not report witness 2");

  const auto z4 = parse_group_spec("Z4");
  const auto z2z2 = parse_group_spec("Z2xZ2");
  if (!compare_group_spectra(z4, z2z2).equal) return fail("spectra of Z4 and Z2xZ2 differ");
  if (!isomorphic_small(z4.graph(), z2z2.graph())) return fail("Cayley graphs of Z4 and Z2xZ2 are not isomorphic");
  auto report = VerificationReport::pass(id, {});
  report.notes.push_back("Z6 vs Z2xZ3: spectra differ, witness 2");
  report.notes.push_back("Z4 vs Z2xZ2: spectra equal, graphs isomorphic");
  return report;
}

}  // namespace cyclospec
