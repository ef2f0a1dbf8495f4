#include "sdw/ring.hpp"

#include <stdexcept>

namespace sdw {

std::shared_ptr<const QuotientRing> QuotientRing::make(RingPtr P, std::vector<Polynomial> gens) {
  std::vector<Polynomial> nonzero;
  for (auto& g : gens) {
    if (!(*g.ring() == *P)) throw std::invalid_argument("ideal generator from another ring");
    if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous generator " + g.to_string());
    if (!g.is_zero()) nonzero.push_back(g);
  }
  auto R = std::shared_ptr<QuotientRing>(new QuotientRing());
  R->P_ = P;
  R->gens_ = std::move(nonzero);
  R->gb_ = ideal_groebner(P, R->gens_);
  for (const auto& g : R->gb_)
    if (g.lead().mono.is_one()) throw std::invalid_argument("defining ideal is the unit ideal");
  std::vector<Monomial> leads;
  for (const auto& g : R->gb_) leads.push_back(g.lead().mono);
  R->dim_ = monomial_dimension(*P, leads);
  R->cache_ = std::make_shared<Cache>();
  return R;
}

HilbertSeries QuotientRing::hilbert_series() const {
  std::vector<Monomial> leads;
  for (const auto& g : gb_) leads.push_back(g.lead().mono);
  return {hilbert_numerator(*P_, leads), P_->weights()};
}

}  // namespace sdw
