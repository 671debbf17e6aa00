// Runs the acceptance checks and prints one line per criterion.
// Exit status is non-zero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "qsys/verify.hpp"

namespace {

// Criteria with several checks share one overall budget.
constexpr double kGroupLimitMs[] = {0, 10e3, 60e3, 300e3, 1e3, 300e3, 300e3,
                                    900e3, 600e3, 300e3, 300e3, 120e3, 600e3};

}  // namespace

int main(int argc, char** argv) {
  qsys::VerifyOptions options;
  if (argc > 1) options.threads = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
  if (options.threads == 0) options.threads = 1;

  const auto report = qsys::run_verification(options);

  struct Group {
    bool passed = true;
    double elapsed_ms = 0;
    std::string ids;
    std::string summary;
  };
  std::map<int, Group> groups;
  for (const auto& c : report.checks) {
    Group& g = groups[c.criterion];
    g.passed = g.passed && c.passed;
    g.elapsed_ms += c.elapsed_ms;
    g.ids += (g.ids.empty() ? "" : "+") + c.id;
    std::string text = c.actual;
    if (!c.passed) text += " | " + c.detail;
    g.summary += (g.summary.empty() ? "" : " || ") + text;
  }

  int failed = 0;
  for (auto& [criterion, g] : groups) {
    if (g.elapsed_ms > kGroupLimitMs[criterion]) {
      g.passed = false;
      g.summary += " | over the time limit";
    }
    failed += !g.passed;
    std::printf("[%s] criterion %2d %-22s %.2fs/%.0fs  %s\n", g.passed ? "PASS" : "FAIL",
                criterion, g.ids.c_str(), g.elapsed_ms / 1000.0, kGroupLimitMs[criterion] / 1000.0,
                g.summary.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(groups.size()) - failed,
              groups.size());
  return failed == 0 ? 0 : 1;
}
