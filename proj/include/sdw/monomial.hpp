#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sdw/field.hpp"

namespace sdw {

/// A monomial in at most eight variables.  Exponents are packed one per
/// byte (variable i in byte i) and must stay below 128 so that bytewise
/// arithmetic never carries.  The weighted degree is cached.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 127;

  Monomial() = default;

  int exponent(int var) const { return static_cast<int>((packed_ >> (8 * var)) & 0xff); }
  int degree() const { return degree_; }
  std::uint64_t packed() const { return packed_; }
  bool is_one() const { return packed_ == 0; }

  bool divides(const Monomial& other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    return (((other.packed_ | kHigh) - packed_) & kHigh) == kHigh;
  }
  bool coprime(const Monomial& other) const {
    std::uint64_t a = packed_, b = other.packed_;
    for (int i = 0; i < kMaxVars; ++i, a >>= 8, b >>= 8)
      if ((a & 0xff) && (b & 0xff)) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.packed_ == b.packed_; }

  /// Product; throws std::overflow_error when an exponent would exceed kMaxExponent.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// this / d, assuming d divides this.
  Monomial quotient(const Monomial& d) const {
    Monomial q;
    q.packed_ = packed_ - d.packed_;
    q.degree_ = degree_ - d.degree_;
    return q;
  }

 private:
  friend class PolyRing;
  std::uint64_t packed_ = 0;
  std::int32_t degree_ = 0;
};

/// Polynomial ring k[x_1..x_n] with positive integer weights and the
/// weighted graded reverse lexicographic order.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights);

  const PrimeField& field() const { return field_; }
  int num_vars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight_sum() const;
  int var_index(const std::string& name) const;  // -1 if absent

  Monomial one() const { return Monomial{}; }
  Monomial var(int i) const;
  Monomial make(std::span<const int> exponents) const;
  std::vector<int> exponents(const Monomial& m) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;

  /// grevlex: +1 if a > b, -1 if a < b, 0 if equal.
  static int compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    std::uint64_t x = a.packed() ^ b.packed();
    if (x == 0) return 0;
    int byte = (63 - std::countl_zero(x)) / 8;
    int ea = static_cast<int>((a.packed() >> (8 * byte)) & 0xff);
    int eb = static_cast<int>((b.packed() >> (8 * byte)) & 0xff);
    return ea < eb ? 1 : -1;
  }

  std::string to_string(const Monomial& m) const;
  bool operator==(const PolyRing& o) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

}  // namespace sdw
