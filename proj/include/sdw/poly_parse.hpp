#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sdw/polynomial.hpp"

namespace sdw {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses expressions such as "x2^2 - x1*x3", "3*x*(y + z)^2".  Integer
/// constants are reduced into the coefficient field.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace sdw
