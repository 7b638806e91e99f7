#pragma once

// Numbered verification suite: each criterion aggregates a family of checks
// into one pass/fail line with the measured quantities embedded, so the
// report doubles as a regression record.  The full suite additionally
// re-renders itself and byte-compares the two renderings.

#include <cstdint>
#include <string>
#include <vector>

namespace ngonstar {

struct CheckLine {
  int criterion = 0;      // 1..10 for numbered criteria, 0 for named checks
  std::string label;      // short name used when criterion == 0
  bool pass = false;
  std::string detail;     // measured values and thresholds
};

// One rendered report line ("criterion N: PASS — ..." or
// "check <label>: FAIL — ...").
[[nodiscard]] std::string render_check_line(const CheckLine& line);

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckLine> lines;
  bool all_pass = false;
  std::string text;       // full report including header and summary
};

// Runs one numbered criterion (1..9).  Deterministic for a fixed seed.
[[nodiscard]] CheckLine run_criterion(int criterion, std::uint64_t seed);

// Runs a suite: "all" is criteria 1..10 (10 is the determinism
// byte-comparison of the re-rendered report body), "appendix" is the
// reflection-conjugation identity plus the root-analysis criterion.
// Throws std::invalid_argument for unknown suite names.
[[nodiscard]] VerifyReport run_verify(const std::string& suite, std::uint64_t seed);

}  // namespace ngonstar
