#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace dforge {

/// Unmet marks an optional hypothesis that does not hold; it is not a failure.
enum class Status { Pass, Fail, Skipped, Unmet };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Unmet: return "unmet";
  }
  return "?";
}

/// One verified property. Residual and tolerance are 0 for exact checks.
struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string witness;  ///< empty unless the check failed
  std::string detail;
  bool sampled = false;

  bool passed() const { return status != Status::Fail; }
  void fail(std::string w) {
    if (status != Status::Fail) witness = std::move(w);
    status = Status::Fail;
  }
};

struct Report {
  std::vector<CheckResult> checks;

  CheckResult& add(CheckResult c) { return checks.emplace_back(std::move(c)); }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

}  // namespace dforge
