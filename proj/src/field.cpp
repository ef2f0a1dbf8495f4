#include "sdw/field.hpp"

#include <stdexcept>

namespace sdw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t characteristic) : p_(characteristic) {
  if (characteristic >= (1u << 31))
    throw std::invalid_argument("characteristic must be below 2^31");
  if (!is_prime(characteristic))
    throw std::invalid_argument("characteristic " + std::to_string(characteristic) +
                                " is not prime");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  // extended Euclid on signed 64-bit values
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::int64_t PrimeField::to_signed(Elem a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

}  // namespace sdw
