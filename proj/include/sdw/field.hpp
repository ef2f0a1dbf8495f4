#pragma once

#include <cstdint>
#include <string>

namespace sdw {

/// Integers modulo a prime p < 2^31.  Elements are stored in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t characteristic = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  Elem from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Elem a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace sdw
