#pragma once

#include <string>
#include <vector>

namespace slc {

/// One verified identity. `status` is "pass" or "FAIL" for algebra-level
/// checks and "identical", "on_shell" or "FAIL" for realization checks.
struct CheckRecord {
  std::string name;
  std::string relation;  // short tag naming the relation family
  std::string status;
  std::size_t residual_terms = 0;

  bool passed() const { return status != "FAIL"; }
};

/// Informational output that is not a pass/fail check: comparisons with
/// printed formulas that do not hold, derived coefficients, measurements.
struct Diagnostic {
  std::string name;
  std::string kind;  // "mismatch", "match", "derived", "info"
  std::string text;
};

struct Report {
  int n = 0;
  std::vector<CheckRecord> checks;
  std::vector<Diagnostic> diagnostics;

  bool all_passed() const;
  void add(Report other);
  /// {"n":..,"identities":[{"name","relation","status","residual_terms"}],"diagnostics":[...]}
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace slc
