#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "sdw/groebner.hpp"

namespace sdw {

/// R = P/I for a homogeneous proper ideal I, stored with its reduced Gröbner basis.
class QuotientRing {
 public:
  /// Throws std::invalid_argument for inhomogeneous generators or the unit ideal.
  static std::shared_ptr<const QuotientRing> make(RingPtr P, std::vector<Polynomial> gens);
  static std::shared_ptr<const QuotientRing> polynomial(RingPtr P) { return make(std::move(P), {}); }

  const RingPtr& poly_ring() const { return P_; }
  const PrimeField& field() const { return P_->field(); }
  int num_vars() const { return P_->num_vars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& ideal_basis() const { return gb_; }
  bool is_polynomial_ring() const { return gb_.empty(); }

  Polynomial reduce(const Polynomial& f) const { return reduce_polynomial(f, gb_); }
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  /// Krull dimension of R.
  int dim() const { return dim_; }
  /// dim P - dim R.
  int codim() const { return num_vars() - dim_; }
  HilbertSeries hilbert_series() const;

  /// Invariants filled in lazily by the depth computation.
  struct Cache {
    std::mutex mutex;
    std::optional<int> depth;
  };
  Cache& cache() const { return *cache_; }

 private:
  QuotientRing() = default;
  RingPtr P_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> gb_;
  int dim_ = 0;
  std::shared_ptr<Cache> cache_;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

}  // namespace sdw
