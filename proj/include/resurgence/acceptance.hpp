#pragma once

// The numbered acceptance checks, shared by the acceptance test binary and
// `verify`. Each check reports its worst residual against a fixed tolerance.
// The full suite reruns every check on larger sample sets.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resurgence/serialization.hpp"

namespace resurgence {

enum class Suite { fast, full };

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite s);

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct SuiteReport {
  Suite suite = Suite::fast;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool all_passed() const;
};

/// Runs checks 1..14 in order; `on_result` sees each result as it finishes.
SuiteReport run_suite(Suite suite, const std::function<void(const CheckResult&)>& on_result = {});

/// One line: "PASS  3 laplace-lambda32  residual=... tol=... (0.01 s)".
std::string format_line(const CheckResult& r);
Json to_json(const SuiteReport& rep);

}  // namespace resurgence
