#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdw/module.hpp"
#include "sdw/poly_parse.hpp"

namespace sdw::testing {

inline RingPtr poly_ring(std::vector<std::string> names, std::vector<int> weights = {}) {
  return std::make_shared<PolyRing>(PrimeField(), std::move(names), std::move(weights));
}

inline QRingPtr quotient(const RingPtr& P, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(P, g));
  return QuotientRing::make(P, ps);
}

/// Rows are generators, columns relations, entries parsed as polynomials.
inline PresentedModule coker(const QRingPtr& R, std::vector<int> degrees,
                             const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> m;
  for (const auto& r : rows) {
    std::vector<Polynomial> row;
    for (const auto& e : r) row.push_back(parse_polynomial(R->poly_ring(), e));
    m.push_back(row);
  }
  return PresentedModule::from_matrix(R, std::move(degrees), m);
}

inline FreeElement element(const FreeModule& F, const std::vector<std::string>& comps) {
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(parse_polynomial(F.ring(), c));
  return F.from_components(ps);
}

inline std::vector<long long> hf(const PresentedModule& M, int lo, int hi) {
  return M.hilbert_function(lo, hi);
}

}  // namespace sdw::testing
