#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "redweave/enumerate.hpp"

namespace redweave {

/// Invariant suites runnable over all of S_n.
inline constexpr std::string_view kSuiteNames[] = {
    "words", "classes", "poset", "bounds", "free", "line", "rect",
    "cycles", "cube", "subnet", "paren",
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // first few, for the report

  bool ok() const noexcept { return violation_count == 0; }
};

struct ScanReport {
  int n = 0;
  std::vector<SuiteResult> suites;
  bool ok() const noexcept;
};

/// Runs the named suites ("all" expands to every suite) over S_n.
/// Throws InputError for an unknown suite name.
ScanReport run_scan(int n, const std::vector<std::string>& suites, const RunOptions& options = {});

}  // namespace redweave
