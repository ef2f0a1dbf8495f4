#include "sdw/free_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdw {

FreeModule::FreeModule(RingPtr ring, std::vector<int> degrees, ModuleOrderKind kind)
    : ring_(std::move(ring)), degrees_(std::move(degrees)), kind_(kind) {
  if (kind_ == ModuleOrderKind::Schreyer)
    throw std::invalid_argument("use FreeModule::schreyer for Schreyer orders");
}

FreeModule FreeModule::schreyer(RingPtr ring, std::vector<Monomial> shifts,
                                std::vector<std::uint32_t> base_comps,
                                const std::vector<int>& base_degrees) {
  if (shifts.size() != base_comps.size())
    throw std::invalid_argument("Schreyer data size mismatch");
  FreeModule F;
  F.ring_ = std::move(ring);
  F.kind_ = ModuleOrderKind::Schreyer;
  F.degrees_.resize(shifts.size());
  for (std::size_t i = 0; i < shifts.size(); ++i)
    F.degrees_[i] = shifts[i].degree() + base_degrees.at(base_comps[i]);
  F.shifts_ = std::move(shifts);
  F.base_comps_ = std::move(base_comps);
  F.base_degrees_ = base_degrees;
  return F;
}

int FreeModule::compare_schreyer(const VTerm& a, const VTerm& b) const {
  Monomial ma = a.mono * shifts_[a.comp];
  Monomial mb = b.mono * shifts_[b.comp];
  std::uint32_t ca = base_comps_[a.comp], cb = base_comps_[b.comp];
  int da = ma.degree() + base_degrees_[ca], db = mb.degree() + base_degrees_[cb];
  if (da != db) return da > db ? 1 : -1;
  int c = PolyRing::compare(ma, mb);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

void FreeModule::normalize(FreeElement& v) const {
  std::sort(v.begin(), v.end(), [this](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  FreeElement out;
  out.reserve(v.size());
  const auto& F = field();
  for (const auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  v = std::move(out);
}

FreeElement FreeModule::add_scaled(const FreeElement& f, const FreeElement& g, const Monomial& m,
                                   PrimeField::Elem c) const {
  if (c == 0 || g.empty()) return f;
  const auto& F = field();
  FreeElement out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    VTerm gt{g[j].mono * m, g[j].comp, 0};
    int cmp = compare(f[i], gt);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      gt.coeff = F.mul(c, g[j].coeff);
      out.push_back(gt);
      ++j;
    } else {
      auto s = F.add(f[i].coeff, F.mul(c, g[j].coeff));
      if (s != 0) out.push_back({gt.mono, gt.comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].mono * m, g[j].comp, F.mul(c, g[j].coeff)});
  return out;
}

FreeElement FreeModule::scaled(const FreeElement& g, const Monomial& m, PrimeField::Elem c) const {
  FreeElement out;
  if (c == 0) return out;
  out.reserve(g.size());
  for (const auto& t : g) out.push_back({t.mono * m, t.comp, field().mul(c, t.coeff)});
  return out;
}

FreeElement FreeModule::add(const FreeElement& f, const FreeElement& g) const {
  return add_scaled(f, g, ring_->one(), 1);
}

FreeElement FreeModule::sub(const FreeElement& f, const FreeElement& g) const {
  return add_scaled(f, g, ring_->one(), field().neg(1));
}

FreeElement FreeModule::times(const FreeElement& v, const Polynomial& p) const {
  FreeElement out;
  for (const auto& t : p.terms()) out = add_scaled(out, v, t.mono, t.coeff);
  return out;
}

FreeElement FreeModule::monic(const FreeElement& v) const {
  if (v.empty() || v.front().coeff == 1) return v;
  return scaled(v, ring_->one(), field().inv(v.front().coeff));
}

FreeElement FreeModule::basis_times(std::uint32_t i, const Polynomial& p) const {
  FreeElement v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, i, t.coeff});
  return v;  // already sorted: a single component inherits the grevlex order
}

FreeElement FreeModule::basis(std::uint32_t i) const { return {VTerm{ring_->one(), i, 1}}; }

FreeElement FreeModule::from_components(const std::vector<Polynomial>& comps) const {
  if (static_cast<int>(comps.size()) != rank())
    throw std::invalid_argument("component count does not match free module rank");
  FreeElement v;
  for (std::uint32_t i = 0; i < comps.size(); ++i)
    for (const auto& t : comps[i].terms()) v.push_back({t.mono, i, t.coeff});
  normalize(v);
  return v;
}

Polynomial FreeModule::component(const FreeElement& v, std::uint32_t i) const {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == i) terms.push_back({t.mono, t.coeff});
  return Polynomial(ring_, std::move(terms));
}

std::vector<Polynomial> FreeModule::components(const FreeElement& v) const {
  std::vector<std::vector<Term>> terms(rank());
  for (const auto& t : v) terms[t.comp].push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank());
  for (auto& ts : terms) out.emplace_back(ring_, std::move(ts));
  return out;
}

FreeElement FreeModule::import(const FreeElement& v) const {
  FreeElement w = v;
  for (const auto& t : w)
    if (static_cast<int>(t.comp) >= rank()) throw std::invalid_argument("component out of range");
  std::sort(w.begin(), w.end(), [this](const VTerm& a, const VTerm& b) { return compare(a, b) > 0; });
  return w;
}

std::optional<int> FreeModule::homogeneous_degree(const FreeElement& v) const {
  if (v.empty()) return std::nullopt;
  int d = term_degree(v.front());
  for (const auto& t : v)
    if (term_degree(t) != d) return std::nullopt;
  return d;
}

std::string FreeModule::to_string(const FreeElement& v) const {
  auto comps = components(v);
  std::string s = "[";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].to_string();
  }
  return s + "]";
}

}  // namespace sdw
