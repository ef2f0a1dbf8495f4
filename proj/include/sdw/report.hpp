#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdw/verdict.hpp"

namespace sdw {

struct CheckRecord {
  std::string name;
  std::vector<std::string> inputs;
  Verdict verdict = Verdict::Unknown;
  /// Set when the verdict is verified_up_to_bound.
  std::optional<int> bound;
  std::string witness;
  HypothesisFlags hypotheses;
  double timing_ms = 0;
  std::optional<std::string> error;
  /// Expected verdict declared by the session, if any.
  std::optional<Verdict> expected;

  /// Matches the expectation (or, for harness records, is not a failure).
  bool passed() const;
};

struct CheckReport {
  std::string tool_version;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
};

extern const char* const kToolVersion;

}  // namespace sdw
