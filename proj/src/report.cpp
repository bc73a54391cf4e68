#include "cyclospec/report.hpp"

#include <algorithm>
#include <utility>

namespace cyclospec {

VerificationReport VerificationReport::pass(std::string id, ParamTuple params) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters.push_back(std::move(params));
  return r;
}

VerificationReport VerificationReport::fail(std::string id, ParamTuple params, Counterexample cex) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters.push_back(std::move(params));
  r.passed = false;
  r.counterexample = std::move(cex);
  return r;
}

VerificationReport compare_polys(std::string id, ParamTuple params, const IntPoly& lhs, const IntPoly& rhs,
                                 std::string detail) {
  if (lhs == rhs) return VerificationReport::pass(std::move(id), std::move(params));
  Counterexample cex{params, lhs, rhs, std::move(detail)};
  return VerificationReport::fail(std::move(id), std::move(params), std::move(cex));
}

VerificationReport merge_reports(std::string id, std::span<const VerificationReport> parts) {
  VerificationReport out;
  out.identity_id = std::move(id);
  for (const auto& part : parts) {
    out.parameters.insert(out.parameters.end(), part.parameters.begin(), part.parameters.end());
    if (!part.passed && out.passed) {
      out.passed = false;
      out.counterexample = part.counterexample;
    }
    for (const auto& note : part.notes)
      if (std::find(out.notes.begin(), out.notes.end(), note) == out.notes.end()) out.notes.push_back(note);
  }
  return out;
}

}  // namespace cyclospec
