#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bosent::verify {

/// Outcome of one self-verification check.
struct CheckResult {
  std::string name;
  bool passed;
  double measured;          // worst observed value for the primary clause
  std::string requirement;  // e.g. "<= 1e-08", "in [1.95, 2.15]", "> 0"
  std::string detail;       // secondary clauses and context
};

struct VerifyOptions {
  /// Shrink the expensive dense-diagonalization cutoffs and loosen every
  /// tolerance by x100. The check set and parameter grids stay identical.
  bool fast = false;
  /// Seed for the randomized eigensolver reconstruction inputs.
  std::uint64_t seed = 20260810;
};

/// Run the full self-verification suite. Every check is pinned to its
/// tolerance here; callers only render results.
std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

/// One line per check: "PASS <name> measured=<v> require <req>  <detail>".
std::string format_result_line(const CheckResult& r);

}  // namespace bosent::verify
