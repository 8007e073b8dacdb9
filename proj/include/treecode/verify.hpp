#pragma once

// The ten acceptance checks, shared by `treecode verify` and the
// acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

#include "treecode/io.hpp"

namespace treecode {

struct VerifyOptions {
  std::uint64_t seed = 7;
  unsigned threads = 1;
  /// Include elapsed seconds in JSON (breaks byte-identical reruns).
  bool timing = false;
  /// Check ids to run; empty means all.
  std::vector<int> only;
};

struct CheckResult {
  int id = 0;
  std::string name;
  std::string claim;
  bool pass = false;
  Json computed;
  Json expected;
  std::string summary;  // one line, derived from computed
  double seconds = 0;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // ordered by id
  bool all_pass() const;
};

inline constexpr int kCheckCount = 10;

CheckResult run_check(int id, const VerifyOptions& options);
VerificationReport verify_all(const VerifyOptions& options);

Json to_json(const VerificationReport& report, bool timing);
/// One "PASS|FAIL <id> <name>: <summary>" line per check plus a total.
std::string render_text(const VerificationReport& report, bool timing);

}  // namespace treecode
