#pragma once

#include <string>
#include <vector>

namespace sdw {

enum class Verdict { True, False, VerifiedUpToBound, Unknown, Unsupported };

std::string to_string(Verdict v);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
Verdict verdict_from_string(const std::string& s);

inline Verdict from_bool(bool b) { return b ? Verdict::True : Verdict::False; }

enum class Provenance { Verified, Asserted, Unknown };
std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// A hypothesis consumed by a check, with where its truth value came from.
struct HypothesisFlag {
  std::string name;
  Provenance provenance = Provenance::Unknown;
  bool holds = false;
  std::string detail;
};

using HypothesisFlags = std::vector<HypothesisFlag>;

}  // namespace sdw
