#include "sdw/report.hpp"

namespace sdw {

const char* const kToolVersion = "sdw 0.3.0";

bool CheckRecord::passed() const {
  if (error) return false;
  if (expected) {
    if (*expected == Verdict::VerifiedUpToBound || *expected == Verdict::True)
      return verdict == Verdict::True || verdict == Verdict::VerifiedUpToBound;
    return verdict == *expected;
  }
  return verdict != Verdict::False;
}

bool CheckReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

}  // namespace sdw
