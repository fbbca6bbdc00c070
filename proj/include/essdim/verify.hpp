#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace essdim::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CheckResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::string first_failure;  // empty when nothing failed

  bool ok() const { return failed == 0 && passed > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const;
};

/// groups, symplectic, repmin, clifford, witt, edim.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws UnknownSuite.
std::vector<SuiteReport> run(const std::string& suite, std::uint64_t seed);

std::string render_text(const std::vector<SuiteReport>& reports, std::uint64_t seed);
std::string render_json(const std::vector<SuiteReport>& reports, std::uint64_t seed);

}  // namespace essdim::verify
