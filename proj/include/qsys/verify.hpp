#ifndef QSYS_VERIFY_HPP
#define QSYS_VERIFY_HPP

// The acceptance suite: fixed checks over the constructions, counters,
// partition search and Turán search, each with a pinned time limit.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsys/partition.hpp"

namespace qsys {

struct CheckInfo {
  std::string id;
  int criterion = 0;  // checks sharing a number are reported together
  double limit_ms = 0;
  std::string summary;
};

/// All checks, in run order.
const std::vector<CheckInfo>& check_catalog();

struct CheckResult {
  std::string id;
  int criterion = 0;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string detail;
  double elapsed_ms = 0;
  double limit_ms = 0;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Check ids to run; empty runs everything. Unknown ids throw
  /// std::invalid_argument.
  std::vector<std::string> only;
  unsigned threads = 1;
  /// Negative control: drop one edge from T4(12) before the edge-count check.
  bool tamper = false;
  /// Called after each check finishes.
  std::function<void(const CheckResult&)> on_result;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// id,criterion,status,expected,actual,detail. Timings are left out so
  /// reruns with the same seed are byte-identical.
  std::string to_csv() const;
  /// Same content as the CSV plus the seed and pass/fail totals.
  nlohmann::ordered_json to_json() const;
};

VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace qsys

#endif  // QSYS_VERIFY_HPP
