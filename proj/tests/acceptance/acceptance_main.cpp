// Acceptance binary: one PASS/FAIL line per numbered check.
//   usage: acceptance [fast|full] [--json FILE]

#include <cstdio>
#include <fstream>
#include <string>

#include "resurgence/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace resurgence;
  std::string suite_name = "fast";
  std::string json_path;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--json" && i + 1 < argc) {
      json_path = argv[++i];
    } else {
      suite_name = a;
    }
  }
  const auto suite = parse_suite(suite_name);
  if (!suite) {
    std::fprintf(stderr, "unknown suite '%s' (expected fast or full)\n", suite_name.c_str());
    return 2;
  }
  const SuiteReport rep = run_suite(*suite, [](const CheckResult& r) {
    std::printf("%s\n", format_line(r).c_str());
    std::fflush(stdout);
  });
  int failed = 0;
  for (const CheckResult& c : rep.checks) failed += !c.passed;
  std::printf("%s suite: %d/%zu passed in %.2f s\n", to_string(*suite).c_str(),
              static_cast<int>(rep.checks.size()) - failed, rep.checks.size(), rep.seconds);
  if (!json_path.empty()) std::ofstream(json_path) << to_json(rep).dump(2) << '\n';
  return failed == 0 ? 0 : 1;
}
