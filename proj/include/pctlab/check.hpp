#pragma once

#include <string>
#include <vector>

namespace pctlab {

/// One line of a verification report.
struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool passed = false;
  /// Reported only; never counts as a failure.
  bool informational = false;
  std::string note;
};

inline Check make_check(std::string name, double residual, double tol, std::string note = {}) {
  return Check{std::move(name), residual, tol, residual <= tol, false, std::move(note)};
}

inline Check make_info(std::string name, double residual, std::string note = {}) {
  return Check{std::move(name), residual, 0.0, true, true, std::move(note)};
}

using CheckList = std::vector<Check>;

inline bool all_passed(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.informational && !c.passed) return false;
  return true;
}

inline void append(CheckList& into, const CheckList& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace pctlab
