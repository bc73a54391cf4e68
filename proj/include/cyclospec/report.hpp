#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclospec/polyalg.hpp"

namespace cyclospec {

using ParamTuple = std::vector<long>;

struct Counterexample {
  ParamTuple parameters;
  std::optional<IntPoly> lhs;
  std::optional<IntPoly> rhs;
  std::string detail;
};

/// Outcome of checking one identity over one or more parameter tuples.
/// `passed` holds exactly when `counterexample` is empty; build reports with
/// the factories below to keep it that way.
struct VerificationReport {
  std::string identity_id;
  std::vector<ParamTuple> parameters;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  static VerificationReport pass(std::string id, ParamTuple params);
  static VerificationReport fail(std::string id, ParamTuple params, Counterexample cex);
};

/// Report for an exact polynomial identity lhs == rhs.
VerificationReport compare_polys(std::string id, ParamTuple params, const IntPoly& lhs, const IntPoly& rhs,
                                 std::string detail = {});

/// Concatenates parameter lists in order; the first failing report supplies
/// the counterexample. Notes are kept, deduplicated, in first-seen order.
VerificationReport merge_reports(std::string id, std::span<const VerificationReport> parts);

}  // namespace cyclospec
