#include "sdw/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdw {

Monomial operator*(const Monomial& a, const Monomial& b) {
  constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  Monomial r;
  r.packed_ = a.packed_ + b.packed_;
  if (r.packed_ & kHigh) throw std::overflow_error("monomial exponent overflow");
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() > static_cast<std::size_t>(Monomial::kMaxVars))
    throw std::invalid_argument("at most " + std::to_string(Monomial::kMaxVars) +
                                " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw std::invalid_argument("weight list length does not match variable count");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("variable weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
}

int PolyRing::weight_sum() const {
  int s = 0;
  for (int w : weights_) s += w;
  return s;
}

int PolyRing::var_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Monomial PolyRing::var(int i) const {
  Monomial m;
  m.packed_ = std::uint64_t{1} << (8 * i);
  m.degree_ = weights_[i];
  return m;
}

Monomial PolyRing::make(std::span<const int> exponents) const {
  if (exponents.size() != names_.size())
    throw std::invalid_argument("exponent vector length does not match ring arity");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int e = exponents[i];
    if (e < 0 || e > Monomial::kMaxExponent) throw std::overflow_error("exponent out of range");
    m.packed_ |= static_cast<std::uint64_t>(e) << (8 * i);
    m.degree_ += e * weights_[i];
  }
  return m;
}

std::vector<int> PolyRing::exponents(const Monomial& m) const {
  std::vector<int> e(names_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m.exponent(static_cast<int>(i));
  return e;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < num_vars(); ++i) {
    int e = std::max(a.exponent(i), b.exponent(i));
    m.packed_ |= static_cast<std::uint64_t>(e) << (8 * i);
    m.degree_ += e * weights_[i];
  }
  return m;
}

std::string PolyRing::to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < num_vars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool PolyRing::operator==(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
}

}  // namespace sdw
