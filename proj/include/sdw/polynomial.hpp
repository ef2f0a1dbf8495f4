#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdw/monomial.hpp"

namespace sdw {

struct Term {
  Monomial mono;
  PrimeField::Elem coeff;
};

/// Exact polynomial over a prime field; terms strictly descending in grevlex,
/// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, PrimeField::Elem c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Weighted degree when every term has the same degree (zero counts as homogeneous of any degree).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(PrimeField::Elem c) const;
  Polynomial times(const Monomial& m, PrimeField::Elem c) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// this + c*m*g merged in descending grevlex; shared by the polynomial and module layers.
std::vector<Term> add_scaled(const PrimeField& field, const std::vector<Term>& f,
                             const std::vector<Term>& g, const Monomial& m, PrimeField::Elem c);

}  // namespace sdw
