#include "sdw/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdw {

std::vector<Term> add_scaled(const PrimeField& field, const std::vector<Term>& f,
                             const std::vector<Term>& g, const Monomial& m, PrimeField::Elem c) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == f.size() ? -1 : PolyRing::compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, field.mul(c, g[j].coeff)});
      ++j;
    } else {
      auto s = field.add(f[i].coeff, field.mul(c, g[j].coeff));
      if (s != 0) out.push_back({gm, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& F = ring_->field();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return PolyRing::compare(a.mono, b.mono) > 0;
  });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = F.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  auto e = ring->field().from_int(c);
  Polynomial p(ring);
  if (e != 0) p.terms_.push_back({ring->one(), e});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Polynomial p(ring);
  p.terms_.push_back({ring->var(i), 1});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, PrimeField::Elem c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(ring_ && o.ring_ && *ring_ == *o.ring_))
    throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = add_scaled(ring_->field(), terms_, o.terms_, ring_->one(), 1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = add_scaled(ring_->field(), terms_, o.terms_, ring_->one(), ring_->field().neg(1));
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  for (const auto& t : terms_) r.terms_ = add_scaled(ring_->field(), r.terms_, o.terms_, t.mono, t.coeff);
  return r;
}

Polynomial Polynomial::scaled(PrimeField::Elem c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, PrimeField::Elem c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const auto& F = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    auto c = F.to_signed(terms_[i].coeff);
    bool one = terms_[i].mono.is_one();
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    auto a = c < 0 ? -c : c;
    if (one) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += ring_->to_string(terms_[i].mono);
    }
  }
  return s;
}

}  // namespace sdw
