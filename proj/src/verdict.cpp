#include "sdw/verdict.hpp"

#include <stdexcept>

namespace sdw {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::VerifiedUpToBound: return "verified_up_to_bound";
    case Verdict::Unknown: return "unknown";
    case Verdict::Unsupported: return "unsupported";
  }
  return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "true") return Verdict::True;
  if (s == "false") return Verdict::False;
  if (s == "verified_up_to_bound" || s == "verified") return Verdict::VerifiedUpToBound;
  if (s == "unknown") return Verdict::Unknown;
  if (s == "unsupported") return Verdict::Unsupported;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Verified: return "verified";
    case Provenance::Asserted: return "asserted";
    case Provenance::Unknown: return "unknown";
  }
  return "unknown";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "verified") return Provenance::Verified;
  if (s == "asserted") return Provenance::Asserted;
  if (s == "unknown") return Provenance::Unknown;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

}  // namespace sdw
