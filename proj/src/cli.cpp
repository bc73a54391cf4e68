#include "cyclospec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclospec/cayley.hpp"
#include "cyclospec/oracle.hpp"
#include "cyclospec/reference_tables.hpp"
#include "cyclospec/sequences.hpp"
#include "cyclospec/spectra.hpp"
#include "cyclospec/verify.hpp"

namespace cyclospec {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "cyclospec/1";

std::string fmt(double v) {
  std::ostringstream os;
  if (std::abs(v) < 5e-13) v = 0.0;  // numeric zero from the eigensolver
  os << std::setprecision(12) << v;
  return os.str();
}

json poly_json(const IntPoly& p, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  if (p.is_zero()) coeffs.push_back("0");
  return json{{"var", var}, {"coeffs", coeffs}};
}

std::string tuple_str(const ParamTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
  return s + ")";
}

json report_json(const VerificationReport& r) {
  json params = json::array();
  for (const auto& t : r.parameters) params.push_back(t);
  json cex = nullptr;
  if (r.counterexample) {
    cex = json{{"parameters", r.counterexample->parameters}, {"detail", r.counterexample->detail}};
    if (r.counterexample->lhs) cex["lhs"] = poly_json(*r.counterexample->lhs, "a");
    if (r.counterexample->rhs) cex["rhs"] = poly_json(*r.counterexample->rhs, "a");
  }
  return json{{"identity", r.identity_id}, {"passed", r.passed},       {"cases", r.parameters.size()},
              {"parameters", params},       {"counterexample", cex}, {"notes", r.notes}};
}

// ---------------------------------------------------------------- tables

struct TablesArgs {
  std::string which;
  long max_n = 0;
  bool check = false;
};

int check_table(const CoefficientTable& t, std::ostream& err) {
  const bool path = t.kind == SequenceKind::Path;
  const long first = path ? reference::kPathFirst : reference::kCycleFirst;
  const std::size_t ref_rows = path ? reference::kPathTable.size() : reference::kCycleTable.size();
  std::size_t cells = 0;
  int mismatches = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto ref_idx = static_cast<std::size_t>(t.indices[r] - first);
    if (ref_idx >= ref_rows) break;
    const std::size_t ref_width = path ? reference::kPathTable[0].size() : reference::kCycleTable[0].size();
    for (std::size_t c = 0; c < std::max(ref_width, t.width); ++c) {
      const long want = c < ref_width ? (path ? reference::kPathTable[ref_idx][c] : reference::kCycleTable[ref_idx][c]) : 0;
      const BigInt got = c < t.width ? t.rows[r][c] : BigInt(0);
      ++cells;
      if (got != want) {
        ++mismatches;
        err << "mismatch " << t.label(r) << " a^" << c << ": computed " << got << ", published " << want << "\n";
      }
    }
  }
  if (mismatches) return kExitFailed;
  err << "check passed: " << cells << " cells match the published table\n";
  return kExitOk;
}

int cmd_tables(const TablesArgs& a, const std::string& format, std::ostream& out, std::ostream& err) {
  const SequenceKind kind = a.which == "L" ? SequenceKind::Path : SequenceKind::Cycle;
  const CoefficientTable t = coefficient_table(kind, a.max_n);
  if (format == "json") {
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      json coeffs = json::array();
      for (const auto& v : t.rows[r]) coeffs.push_back(v.get_str());
      rows.push_back(json{{"label", t.label(r)}, {"coeffs", coeffs}});
    }
    out << json{{"schema", kSchema}, {"table", a.which}, {"width", t.width}, {"rows", rows}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "row";
    for (std::size_t c = 0; c < t.width; ++c) out << ",a^" << c;
    out << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      out << t.label(r);
      for (const auto& v : t.rows[r]) out << "," << v;
      out << "\n";
    }
  } else if (format == "markdown") {
    out << "| |";
    for (std::size_t c = 0; c < t.width; ++c) out << " a^" << c << " |";
    out << "\n|---|";
    for (std::size_t c = 0; c < t.width; ++c) out << "---|";
    out << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      out << "| " << t.label(r) << " |";
      for (const auto& v : t.rows[r]) out << " " << v << " |";
      out << "\n";
    }
  } else {
    out << t.to_tsv();
  }
  return a.check ? check_table(t, err) : kExitOk;
}

// -------------------------------------------------------------- charpoly

struct CharpolyArgs {
  long n = 0;
  std::string var = "a";
  std::string method = "rec";
};

IntPoly recurrence_poly(long n, const std::string& var) {
  IntPoly p = cycle_poly(n);
  if (var == "a") return p;
  // det(lambda I - L) = (-1)^n A_n(2 - lambda)
  p = compose(p, IntPoly{2, -1});
  return n % 2 ? -p : p;
}

IntPoly determinant_poly(long n, const std::string& var) {
  const GroupSpec g = GroupSpec::cyclic(n);
  const CharPoly cp = charpoly_exact(laplacian_of(cayley_graph(g, GeneratorSet::standard(g))));
  return var == "a" ? cp.in_a : cp.in_lambda;
}

int cmd_charpoly(const CharpolyArgs& a, const std::string& format, std::ostream& out, std::ostream& err) {
  if (a.n < 1) throw RangeError("charpoly needs n >= 1, got " + std::to_string(a.n));
  std::vector<std::pair<std::string, IntPoly>> polys;
  if (a.method == "rec" || a.method == "both") polys.emplace_back("rec", recurrence_poly(a.n, a.var));
  if (a.method == "det" || a.method == "both") polys.emplace_back("det", determinant_poly(a.n, a.var));

  const bool agree = polys.size() < 2 || polys[0].second == polys[1].second;
  if (format == "json") {
    json j{{"schema", kSchema}, {"n", a.n}};
    json p = json::object();
    for (const auto& [m, poly] : polys) p[m] = poly_json(poly, a.var);
    j["polys"] = p;
    if (polys.size() == 2) j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "method,var,coeffs\n";
    for (const auto& [m, poly] : polys) {
      out << m << "," << a.var << ",";
      for (std::size_t i = 0; i < poly.coeffs().size(); ++i) out << (i ? " " : "") << poly.coeffs()[i];
      out << "\n";
    }
  } else {
    for (const auto& [m, poly] : polys) {
      const char* name = m == "rec" ? "A" : "det";
      out << (format == "markdown" ? "- " : "") << name << "_" << a.n << "(" << a.var << ") [" << m
          << "] = " << poly.to_string(a.var) << "\n";
    }
  }
  if (agree) return kExitOk;
  if (a.n <= 2) {
    err << "warning: A_" << a.n << " is a formal member of the sequence, not the determinant of the Z_" << a.n
        << " Laplacian\n";
    return kExitOk;
  }
  err << "recurrence and determinant disagree for n = " << a.n << "\n";
  return kExitFailed;
}

// -------------------------------------------------------------- spectrum

struct SpectrumRow {
  std::optional<std::string> rotation;
  double lambda;
  int multiplicity;
};

std::vector<SpectrumRow> spectrum_rows(const CayleySpec& spec, bool& exact) {
  std::vector<SpectrumRow> rows;
  exact = spec.is_standard_cycle();
  if (exact) {
    for (const auto& [rot, mult] : cycle_spectrum(spec.group.order()).multiplicities())
      rows.push_back({rot.to_string(), rot.lambda(), mult});
  } else {
    for (const auto& [v, mult] : numeric_spectrum(spec.graph()).values) rows.push_back({std::nullopt, v, mult});
  }
  return rows;
}

int cmd_spectrum(const std::string& group, const std::string& format, std::ostream& out) {
  const CayleySpec spec = parse_group_spec(group);
  bool exact = false;
  const auto rows = spectrum_rows(spec, exact);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json rot = r.rotation ? json(*r.rotation) : json(nullptr);
      arr.push_back(json{{"rotation", rot}, {"lambda", r.lambda}, {"multiplicity", r.multiplicity}});
    }
    out << json{{"schema", kSchema}, {"group", group}, {"exact", exact}, {"spectrum", arr}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "rotation,lambda,multiplicity\n";
    for (const auto& r : rows) out << r.rotation.value_or("") << "," << fmt(r.lambda) << "," << r.multiplicity << "\n";
  } else if (format == "markdown") {
    out << "| lambda | multiplicity | rotation |\n|---|---|---|\n";
    for (const auto& r : rows)
      out << "| " << fmt(r.lambda) << " | " << r.multiplicity << " | " << r.rotation.value_or("-") << " |\n";
  } else {
    out << "spectrum of " << group << (exact ? " (exact)" : " (numeric)") << "\n";
    for (const auto& r : rows) {
      out << "  " << fmt(r.lambda);
      if (r.multiplicity > 1) out << " (x" << r.multiplicity << ")";
      if (r.rotation) out << "  rotation " << *r.rotation;
      out << "\n";
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- compare

int cmd_compare(const std::string& s1, const std::string& s2, const std::string& format, std::ostream& out) {
  const CayleySpec g1 = parse_group_spec(s1);
  const CayleySpec g2 = parse_group_spec(s2);
  const SpectrumComparison cmp = compare_group_spectra(g1, g2);
  std::optional<bool> iso;
  if (g1.group.order() <= 10) iso = isomorphic_small(g1.graph(), g2.graph());

  if (format == "json") {
    auto spectrum = [](const SpectrumMultiset& s) {
      json arr = json::array();
      for (const auto& [v, m] : s.values) arr.push_back(json{{"lambda", v}, {"multiplicity", m}});
      return arr;
    };
    out << json{{"schema", kSchema},
                {"first", s1},
                {"second", s2},
                {"spectra_equal", cmp.equal},
                {"witness", cmp.witness ? json(*cmp.witness) : json(nullptr)},
                {"only_in_first", cmp.only_in_first},
                {"only_in_second", cmp.only_in_second},
                {"isomorphic", iso ? json(*iso) : json(nullptr)},
                {"first_spectrum", spectrum(cmp.first)},
                {"second_spectrum", spectrum(cmp.second)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  const std::string witness = cmp.witness ? fmt(*cmp.witness) : "";
  const std::string iso_s = iso ? (*iso ? "true" : "false") : "";
  if (format == "csv") {
    out << "first,second,spectra_equal,witness,isomorphic\n"
        << s1 << "," << s2 << "," << (cmp.equal ? "true" : "false") << "," << witness << "," << iso_s << "\n";
  } else if (format == "markdown") {
    out << "| first | second | spectra equal | witness | isomorphic |\n|---|---|---|---|---|\n"
        << "| " << s1 << " | " << s2 << " | " << (cmp.equal ? "yes" : "no") << " | " << witness << " | " << iso_s
        << " |\n";
  } else {
    out << s1 << " vs " << s2 << ": spectra " << (cmp.equal ? "equal" : "differ");
    if (cmp.witness) out << " (witness " << witness << ")";
    out << "\n";
    if (iso) out << "graphs " << (*iso ? "isomorphic" : "not isomorphic") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string id;
  std::optional<long> n, k, m;
  std::optional<unsigned> threads;
  bool verbose = false;
};

void print_report_plain(const VerificationReport& r, bool verbose, std::ostream& out) {
  out << r.identity_id << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.parameters.size() << " cases)\n";
  if (verbose)
    for (const auto& t : r.parameters) out << "  " << tuple_str(t) << "\n";
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  if (r.counterexample) {
    out << "  counterexample at " << tuple_str(r.counterexample->parameters) << ": " << r.counterexample->detail << "\n";
    if (r.counterexample->lhs) out << "    lhs = " << *r.counterexample->lhs << "\n";
    if (r.counterexample->rhs) out << "    rhs = " << *r.counterexample->rhs << "\n";
  }
}

int cmd_verify(const VerifyArgs& a, const std::string& format, std::ostream& out) {
  const SweepBounds bounds{a.n, a.k, a.m};
  const unsigned threads = a.threads.value_or(default_thread_count());
  std::vector<VerificationReport> reports;
  if (a.id == "all") {
    for (const auto& info : identity_catalog()) reports.push_back(run_verification(info.id, {}, threads));
  } else {
    reports.push_back(run_verification(a.id, bounds, threads));
  }
  const bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << json{{"schema", kSchema}, {"passed", all_passed}, {"reports", arr}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "identity,passed,cases,counterexample\n";
    for (const auto& r : reports)
      out << r.identity_id << "," << (r.passed ? "true" : "false") << "," << r.parameters.size() << ","
          << (r.counterexample ? tuple_str(r.counterexample->parameters) : "") << "\n";
  } else if (format == "markdown") {
    out << "| identity | result | cases |\n|---|---|---|\n";
    for (const auto& r : reports)
      out << "| " << r.identity_id << " | " << (r.passed ? "pass" : "FAIL") << " | " << r.parameters.size() << " |\n";
  } else {
    for (const auto& r : reports) print_report_plain(r, a.verbose, out);
  }
  return all_passed ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic polynomials and spectra of cyclic-group Laplacians", "cyclospec"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "markdown", "csv", "json"}))
      ->capture_default_str();

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Coefficient table of L_n or A_n");
  tables_cmd->add_option("which", tables.which, "L or A")->required()->check(CLI::IsMember({"L", "A"}));
  tables_cmd->add_option("--max", tables.max_n, "Largest row index")->required();
  tables_cmd->add_flag("--check", tables.check, "Compare with the published table");

  CharpolyArgs charpoly;
  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of the n-cycle Laplacian");
  charpoly_cmd->add_option("n", charpoly.n, "Cycle order")->required();
  charpoly_cmd->add_option("--var", charpoly.var, "Variable")->check(CLI::IsMember({"a", "lambda"}));
  charpoly_cmd->add_option("--method", charpoly.method, "rec, det or both")
      ->check(CLI::IsMember({"rec", "det", "both"}));

  std::string group;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian spectrum of a Cayley graph");
  spectrum_cmd->add_option("group", group, "Group spec, e.g. Z6, Z2xZ3, Z6[1,2]")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep ('all' runs every default sweep)");
  verify_cmd->add_option("identity", verify.id, "Identity id")->required();
  verify_cmd->add_option("--n", verify.n, "Upper bound on n");
  verify_cmd->add_option("--k", verify.k, "Upper bound on k");
  verify_cmd->add_option("--m", verify.m, "Upper bound on m");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (default: CYCLOSPEC_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--verbose", verify.verbose, "List every parameter tuple");
  bool list_ids = false;
  auto* list_cmd = app.add_subcommand("list", "List verification identity ids");
  list_cmd->callback([&] { list_ids = true; });

  std::string first_spec, second_spec;
  auto* compare_cmd = app.add_subcommand("compare", "Compare the spectra and graphs of two Cayley graphs");
  compare_cmd->add_option("first", first_spec)->required();
  compare_cmd->add_option("second", second_spec)->required();

  // Let --format appear after the subcommand as well.
  for (auto* sub : {tables_cmd, charpoly_cmd, spectrum_cmd, verify_cmd, compare_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*tables_cmd) return cmd_tables(tables, format, out, err);
    if (*charpoly_cmd) return cmd_charpoly(charpoly, format, out, err);
    if (*spectrum_cmd) return cmd_spectrum(group, format, out);
    if (*compare_cmd) return cmd_compare(first_spec, second_spec, format, out);
    if (*verify_cmd) return cmd_verify(verify, format, out);
    if (list_ids) {
      for (const auto& info : identity_catalog())
        out << info.id << "\t" << info.statement << "\t" << info.bounds << "\n";
      return kExitOk;
    }
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // parse errors, unknown identity ids, order mismatches, bad generators
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cyclospec
