#include "cyclospec/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "cyclospec/cayley.hpp"
#include "cyclospec/oracle.hpp"
#include "cyclospec/sequences.hpp"
#include "cyclospec/spectra.hpp"

namespace cyclospec {

namespace {

using Checker = std::function<VerificationReport(SequenceCache&, const ParamTuple&)>;

constexpr std::array kCatalog{
    IdentityInfo{"l-product", "L_n = L_{n-k} L_k - L_{n-k-1} L_{k-1}", "--n 60 (all 1 <= k <= n)"},
    IdentityInfo{"l-square", "L_{n-1}^2 = L_{n-2} L_n + 1 and L_{n-1}^2 + L_{n-2}^2 - 1 = a L_{n-1} L_{n-2}", "--n 60"},
    IdentityInfo{"three-term", "A_n = a A_{n-1} - A_{n-2} + 2 A_1 = L_n - L_{n-2} - 2", "--n 200"},
    IdentityInfo{"doubling", "A_{2n} = A_n (A_n + 4)", "--n 50"},
    IdentityInfo{"divisibility", "A_n divides A_{kn}", "--n 20 --k 10"},
    IdentityInfo{"composition", "A_{kn} = A_k o (A_n + 2)", "--n 12 --k 12"},
    IdentityInfo{"addition", "A_{n+p} = A_n (A_p + 2) + 2 A_p - A_{n-p}, p < n", "--n 40"},
    IdentityInfo{"shifted-addition", "A_{kn+p} = (A_p + 2) A_{kn} + 2 A_p - A_{kn-p}", "--n 12 --k 6"},
    IdentityInfo{"oracle", "A_n equals the determinant characteristic polynomial of the n-cycle", "--n 32"},
    IdentityInfo{"gcd", "lambda != 2 shared by Z_n and Z_m is an eigenvalue of Z_gcd(n,m)", "--n 40 --m 40"},
    IdentityInfo{"interval", "every eigenvalue of Z_n lies in [0, 4]", "--n 256"},
    IdentityInfo{"lambda24", "4 in spec(Z_n) iff n even; 2 iff 4 | n (mult 2) or n = 2", "--n 200"},
    IdentityInfo{"subgroup", "spec(Z_n) embeds in spec(Z_kn) with equal multiplicities", "--n 24 --k 8"},
    IdentityInfo{"spectral-map", "P_m maps spec(Z_n) into itself", "--n 32 --m 16"},
    IdentityInfo{"iff", "lambda in spec(Z_kn) iff P_k(lambda) in spec(Z_n)", "--n 16 --k 8"},
    IdentityInfo{"complement-example", "Z2xZ3 vs Z6 spectra differ (witness 2); Z2xZ2 and Z4 coincide", "(none)"},
};

long bound_or(const std::optional<long>& v, long fallback, long minimum, const char* flag) {
  const long b = v.value_or(fallback);
  if (b < minimum)
    throw RangeError(std::string("--") + flag + " must be >= " + std::to_string(minimum) + ", got " +
                     std::to_string(b));
  return b;
}

VerificationReport run_grid(std::string_view id, const std::vector<ParamTuple>& grid, const Checker& check,
                            unsigned threads) {
  std::vector<VerificationReport> results(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SequenceCache cache;  // one per thread
    for (std::size_t i = next++; i < grid.size(); i = next++) results[i] = check(cache, grid[i]);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  return merge_reports(std::string(id), results);
}

}  // namespace

std::span<const IdentityInfo> identity_catalog() { return kCatalog; }

unsigned default_thread_count() {
  if (const char* env = std::getenv("CYCLOSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport check_oracle_equivalence(long n) {
  if (n < 3) throw RangeError("oracle equivalence needs n >= 3");
  const auto spec = CayleySpec{GroupSpec::cyclic(n), GeneratorSet::standard(GroupSpec::cyclic(n)), ""};
  const CharPoly cp = charpoly_exact(laplacian_of(spec.graph()));
  return compare_polys("oracle", {n}, cp.in_a, cycle_poly(n), "determinant char poly vs A_n");
}

VerificationReport run_verification(std::string_view id, const SweepBounds& b, unsigned threads) {
  std::vector<ParamTuple> grid;
  Checker check;

  if (id == "l-product") {
    const long n_max = bound_or(b.n, 60, 1, "n");
    for (long n = 1; n <= n_max; ++n)
      for (long k = 1; k <= n; ++k) grid.push_back({n, k});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_path_product(c, t[0], t[1]); };
  } else if (id == "l-square") {
    const long n_max = bound_or(b.n, 60, 2, "n");
    for (long n = 2; n <= n_max; ++n) grid.push_back({n});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_path_square(c, t[0]); };
  } else if (id == "three-term") {
    const long n_max = bound_or(b.n, 200, 1, "n");
    for (long n = 1; n <= n_max; ++n) grid.push_back({n});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_three_term(c, t[0]); };
  } else if (id == "doubling") {
    const long n_max = bound_or(b.n, 50, 1, "n");
    for (long n = 1; n <= n_max; ++n) grid.push_back({n});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_doubling(c, t[0]); };
  } else if (id == "divisibility") {
    const long n_max = bound_or(b.n, 20, 1, "n");
    const long k_max = bound_or(b.k, 10, 1, "k");
    for (long n = 1; n <= n_max; ++n)
      for (long k = 1; k <= k_max; ++k) grid.push_back({n, k});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_divisibility(c, t[0], t[1]); };
  } else if (id == "composition") {
    const long k_max = bound_or(b.k, 12, 1, "k");
    const long n_max = bound_or(b.n, 12, 1, "n");
    for (long k = 1; k <= k_max; ++k)
      for (long n = 1; n <= n_max; ++n) grid.push_back({k, n});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_composition(c, t[0], t[1]); };
  } else if (id == "addition") {
    const long n_max = bound_or(b.n, 40, 2, "n");
    for (long n = 2; n <= n_max; ++n)
      for (long p = 1; p < n; ++p) grid.push_back({n, p});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_addition(c, t[0], t[1]); };
  } else if (id == "shifted-addition") {
    const long k_max = bound_or(b.k, 6, 1, "k");
    const long n_max = bound_or(b.n, 12, 2, "n");
    for (long k = 1; k <= k_max; ++k)
      for (long n = 2; n <= n_max; ++n)
        for (long p = 1; p < n; ++p) grid.push_back({k, n, p});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_shifted_addition(c, t[0], t[1], t[2]); };
  } else if (id == "oracle") {
    const long n_max = bound_or(b.n, 32, 3, "n");
    for (long n = 3; n <= n_max; ++n) grid.push_back({n});
    check = [](SequenceCache&, const ParamTuple& t) { return check_oracle_equivalence(t[0]); };
  } else if (id == "gcd") {
    const long n_max = bound_or(b.n, 40, 3, "n");
    const long m_max = bound_or(b.m, n_max, 3, "m");
    for (long n = 3; n <= n_max; ++n)
      for (long m = 3; m <= m_max; ++m) grid.push_back({n, m});
    check = [](SequenceCache&, const ParamTuple& t) { return check_gcd_theorem(t[0], t[1]); };
  } else if (id == "interval") {
    const long n_max = bound_or(b.n, 256, 1, "n");
    for (long n = 1; n <= n_max; ++n) grid.push_back({n});
    check = [](SequenceCache&, const ParamTuple& t) { return check_interval(t[0]); };
  } else if (id == "lambda24") {
    const long n_max = bound_or(b.n, 200, 2, "n");
    for (long n = 2; n <= n_max; ++n) grid.push_back({n});
    check = [](SequenceCache&, const ParamTuple& t) { return check_lambda2_lambda4(t[0]); };
  } else if (id == "subgroup") {
    const long n_max = bound_or(b.n, 24, 3, "n");
    const long k_max = bound_or(b.k, 8, 1, "k");
    for (long n = 3; n <= n_max; ++n)
      for (long k = 1; k <= k_max; ++k) grid.push_back({n, k});
    check = [](SequenceCache&, const ParamTuple& t) { return check_subgroup_closure(t[0], t[1]); };
  } else if (id == "spectral-map") {
    const long n_max = bound_or(b.n, 32, 3, "n");
    const long m_max = bound_or(b.m, 16, 1, "m");
    for (long n = 3; n <= n_max; ++n)
      for (long m = 1; m <= m_max; ++m) grid.push_back({n, m});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_spectral_map_closure(c, t[0], t[1]); };
  } else if (id == "iff") {
    const long n_max = bound_or(b.n, 16, 3, "n");
    const long k_max = bound_or(b.k, 8, 1, "k");
    for (long n = 3; n <= n_max; ++n)
      for (long k = 1; k <= k_max; ++k) grid.push_back({n, k});
    check = [](SequenceCache& c, const ParamTuple& t) { return check_iff_corollary(c, t[0], t[1]); };
  } else if (id == "complement-example") {
    grid.push_back({});
    check = [](SequenceCache&, const ParamTuple&) { return check_complement_example(); };
  } else {
    throw UnknownIdentityError("unknown identity id '" + std::string(id) + "'");
  }
  return run_grid(id, grid, check, threads);
}

}  // namespace cyclospec
