#include "sdw/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "sdw/deadline.hpp"

namespace sdw {

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis GroebnerBasis::assume(FreeModule F, std::vector<Polynomial> ring,
                                    std::vector<FreeElement> elements) {
  GroebnerBasis G;
  G.module_ = std::move(F);
  G.ring_ = std::move(ring);
  G.by_comp_.resize(G.module_.rank());
  for (auto& v : elements) {
    if (v.empty()) continue;
    v = G.module_.monic(v);
    bool single = std::all_of(v.begin(), v.end(),
                              [&](const VTerm& t) { return t.comp == v.front().comp; });
    G.entries_.push_back({std::move(v), {}, GbElementKind::Base, single});
    G.index(G.entries_.size() - 1);
  }
  return G;
}

std::vector<FreeElement> GroebnerBasis::elements() const {
  std::vector<FreeElement> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.v);
  return out;
}

void GroebnerBasis::index(std::size_t i) {
  const auto& lead = entries_[i].v.front();
  by_comp_[lead.comp].push_back({lead.mono, static_cast<int>(i)});
}

int GroebnerBasis::find_divisor(const VTerm& t, int& ring_index) const {
  ring_index = -1;
  for (const auto& [m, idx] : by_comp_[t.comp])
    if (m.divides(t.mono)) return idx;
  for (std::size_t j = 0; j < ring_.size(); ++j)
    if (ring_[j].lead().mono.divides(t.mono)) {
      ring_index = static_cast<int>(j);
      return -1;
    }
  return -1;
}

FreeElement GroebnerBasis::merge_tail(const FreeElement& f, std::size_t from, const FreeElement& g,
                                      const Monomial& q, PrimeField::Elem c) const {
  const auto& F = module_.field();
  FreeElement out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 1;
  while (i < f.size() && j < g.size()) {
    VTerm gt{g[j].mono * q, g[j].comp, 0};
    int cmp = module_.compare(f[i], gt);
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
  for (; j < g.size(); ++j) out.push_back({g[j].mono * q, g[j].comp, F.mul(c, g[j].coeff)});
  return out;
}

FreeElement GroebnerBasis::reduce(FreeElement f, FreeElement* acc) const {
  const auto& F = module_.field();
  FreeElement result;
  std::size_t pos = 0;
  FreeElement ring_vec;
  while (pos < f.size()) {
    Deadline::check();
    const VTerm t = f[pos];
    int ring_index;
    int gi = find_divisor(t, ring_index);
    if (gi < 0 && ring_index < 0) {
      result.push_back(t);
      ++pos;
      continue;
    }
    auto c = F.neg(t.coeff);
    if (gi >= 0) {
      const auto& e = entries_[gi];
      Monomial q = t.mono.quotient(e.v.front().mono);
      f = merge_tail(f, pos + 1, e.v, q, c);
      if (acc && e.kind == GbElementKind::Generated && !e.rep.empty())
        *acc = gen_module_.add_scaled(*acc, e.rep, q, c);
    } else {
      const auto& p = ring_[ring_index];
      Monomial q = t.mono.quotient(p.lead().mono);
      ring_vec.clear();
      for (const auto& pt : p.terms()) ring_vec.push_back({pt.mono, t.comp, pt.coeff});
      f = merge_tail(f, pos + 1, ring_vec, q, c);
    }
    pos = 0;
  }
  return result;
}

FreeElement GroebnerBasis::normal_form(const FreeElement& v) const { return reduce(v, nullptr); }

std::optional<FreeElement> GroebnerBasis::lift(const FreeElement& v) const {
  if (!tracked_) throw std::logic_error("lift requires a tracked Gröbner basis");
  FreeElement acc;
  if (!reduce(v, &acc).empty()) return std::nullopt;
  auto neg = gen_module_.field().neg(1);
  FreeElement out = gen_module_.scaled(acc, gen_module_.ring()->one(), neg);
  // keep coefficients reduced modulo the ring ideal
  GroebnerBasis ring_only = GroebnerBasis::assume(gen_module_, ring_, {});
  return ring_only.normal_form(out);
}

std::vector<std::vector<Monomial>> GroebnerBasis::lead_monomials() const {
  std::vector<std::vector<Monomial>> out(module_.rank());
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (const auto& [m, idx] : by_comp_[c]) out[c].push_back(m);
    for (const auto& p : ring_) out[c].push_back(p.lead().mono);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Buchberger

class GbBuilder {
 public:
  GbBuilder(const FreeModule& F, const std::vector<Polynomial>& ring, const GroebnerBasis* base,
            const std::vector<FreeElement>& gens, const GbOptions& opt)
      : opt_(opt), gens_(gens) {
    gb_.module_ = F;
    gb_.ring_ = ring;
    gb_.by_comp_.resize(F.rank());
    gb_.tracked_ = opt.track;
    std::vector<int> gdeg(gens.size(), 0);
    if (!opt.generator_degrees.empty()) {
      if (opt.generator_degrees.size() != gens.size())
        throw std::invalid_argument("generator degree list has the wrong length");
      gdeg = opt.generator_degrees;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].empty()) continue;
      auto d = F.homogeneous_degree(gens[i]);
      if (!d) throw std::invalid_argument("Gröbner basis input must be homogeneous: " + F.to_string(gens[i]));
      if (!opt.generator_degrees.empty() && *d != gdeg[i])
        throw std::invalid_argument("generator degree does not match its element");
      gdeg[i] = *d;
    }
    gen_degrees_ = gdeg;
    if (opt.track) {
      gb_.gen_module_ = FreeModule(F.ring(), gdeg, ModuleOrderKind::TermOverPosition);
      ring_only_ = GroebnerBasis::assume(gb_.gen_module_, ring, {});
    }
    if (base) {
      if (base->module().rank() != F.rank()) throw std::invalid_argument("base lives in another module");
      for (std::size_t i = 0; i < base->size(); ++i) {
        const auto& v = base->element(i);
        bool single = std::all_of(v.begin(), v.end(),
                                  [&](const VTerm& t) { return t.comp == v.front().comp; });
        gb_.entries_.push_back({v, {}, GbElementKind::Base, single});
        gb_.index(gb_.entries_.size() - 1);
      }
    }
    pending_.resize(F.rank());
  }

  GbResult run() {
    const auto& F = gb_.module_;
    GbResult res;
    res.minimal.assign(gens_.size(), false);
    std::map<int, std::vector<int>> gens_by_degree;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].empty()) {
        if (opt_.track) syz_.push_back(gb_.gen_module_.basis(static_cast<std::uint32_t>(i)));
        continue;
      }
      gens_by_degree[gen_degrees_[i]].push_back(static_cast<int>(i));
    }
    auto gen_it = gens_by_degree.begin();
    while (true) {
      bool have_pairs = !degree_count_.empty();
      bool have_gens = gen_it != gens_by_degree.end();
      if (!have_pairs && !have_gens) break;
      int d;
      if (have_pairs && have_gens) d = std::min(degree_count_.begin()->first, gen_it->first);
      else if (have_pairs) d = degree_count_.begin()->first;
      else d = gen_it->first;

      if (have_pairs && degree_count_.begin()->first == d) {
        std::vector<Pair> batch;
        for (auto& bucket : pending_) {
          auto mid = std::stable_partition(bucket.begin(), bucket.end(),
                                           [d](const Pair& p) { return p.degree != d; });
          batch.insert(batch.end(), mid, bucket.end());
          bucket.erase(mid, bucket.end());
        }
        degree_count_.erase(d);
        for (const auto& p : batch) process_pair(p);
      }
      if (have_gens && gen_it->first == d) {
        for (int gi : gen_it->second) {
          FreeElement rep;
          if (opt_.track) rep = gb_.gen_module_.basis(static_cast<std::uint32_t>(gi));
          FreeElement r = gb_.reduce(gens_[gi], opt_.track ? &rep : nullptr);
          if (!r.empty()) {
            res.minimal[gi] = true;
            insert(std::move(r), std::move(rep));
          } else if (opt_.track) {
            add_syzygy(std::move(rep));
          }
        }
        ++gen_it;
      }
    }
    if (opt_.reduce_tails) interreduce();
    if (opt_.track) {
      for (auto& e : gb_.entries_)
        if (e.kind == GbElementKind::Generated) e.rep = ring_only_.normal_form(e.rep);
    }
    (void)F;
    res.basis = std::move(gb_);
    res.syzygies = std::move(syz_);
    return res;
  }

 private:
  struct Pair {
    int a;  // generated element
    int b;  // element index, or -(j+1) for ring element j in component comp
    std::uint32_t comp;
    Monomial lcm;
    int degree;
  };

  const Monomial& lead_of(int b) const {
    if (b >= 0) return gb_.entries_[b].v.front().mono;
    return gb_.ring_[-(b + 1)].lead().mono;
  }

  void add_syzygy(FreeElement s) {
    s = ring_only_.normal_form(s);
    if (!s.empty()) syz_.push_back(std::move(s));
  }

  void add_pair(const Pair& p) {
    pending_[p.comp].push_back(p);
    ++degree_count_[p.degree];
  }

  void drop_degree(int d) {
    auto it = degree_count_.find(d);
    if (it != degree_count_.end() && --it->second == 0) degree_count_.erase(it);
  }

  void insert(FreeElement v, FreeElement rep) {
    const auto& F = gb_.module_;
    const auto& K = F.field();
    auto inv = K.inv(v.front().coeff);
    if (inv != 1) {
      v = F.scaled(v, F.ring()->one(), inv);
      if (opt_.track) rep = gb_.gen_module_.scaled(rep, F.ring()->one(), inv);
    }
    if (opt_.track) rep = ring_only_.normal_form(rep);
    const std::uint32_t c = v.front().comp;
    const Monomial m = v.front().mono;
    bool single = std::all_of(v.begin(), v.end(), [&](const VTerm& t) { return t.comp == c; });
    int h = static_cast<int>(gb_.entries_.size());
    gb_.entries_.push_back({std::move(v), std::move(rep), GbElementKind::Generated, single});

    const PolyRing& R = *F.ring();
    // Gebauer–Möller: prune pending pairs in this component (criterion B)
    auto& bucket = pending_[c];
    std::vector<Pair> kept;
    kept.reserve(bucket.size());
    for (const auto& p : bucket) {
      if (m.divides(p.lcm) && !(R.lcm(lead_of(p.a), m) == p.lcm) &&
          !(R.lcm(lead_of(p.b), m) == p.lcm)) {
        drop_degree(p.degree);
        continue;
      }
      kept.push_back(p);
    }
    bucket.swap(kept);

    // candidate pairs
    struct Cand {
      int b;
      Monomial lcm;
      bool coprime_ok;  // product criterion applies
    };
    std::vector<Cand> cands;
    for (const auto& [lm, idx] : gb_.by_comp_[c]) {
      const auto& e = gb_.entries_[idx];
      bool pc = single && e.single_component && lm.coprime(m);
      cands.push_back({idx, R.lcm(lm, m), pc});
    }
    for (std::size_t j = 0; j < gb_.ring_.size(); ++j) {
      const Monomial& lm = gb_.ring_[j].lead().mono;
      cands.push_back({-static_cast<int>(j) - 1, R.lcm(lm, m), lm.coprime(m)});
    }
    // criterion M (with product-criterion pairs retained as eliminators)
    std::vector<char> alive(cands.size(), 1);
    std::vector<char> in_d(cands.size(), 0);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      alive[i] = 0;
      bool keep = cands[i].coprime_ok;
      if (!keep) {
        keep = true;
        for (std::size_t j = 0; j < cands.size(); ++j) {
          if (j == i || !(alive[j] || in_d[j])) continue;
          if (cands[j].lcm.divides(cands[i].lcm)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) in_d[i] = 1;
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!in_d[i]) continue;
      if (cands[i].coprime_ok) {
        if (opt_.track && cands[i].b >= 0) koszul_syzygy(h, cands[i].b);
        continue;
      }
      add_pair({h, cands[i].b, c, cands[i].lcm, cands[i].lcm.degree() + F.degree(c)});
    }
    gb_.index(h);
  }

  // Both elements are single-component in the same component: g*rep_h - h*rep_g.
  void koszul_syzygy(int h, int g) {
    const auto& F = gb_.module_;
    const auto& eh = gb_.entries_[h];
    const auto& eg = gb_.entries_[g];
    FreeElement s;
    const auto& G = gb_.gen_module_;
    auto neg = F.field().neg(1);
    for (const auto& t : eg.v) s = G.add_scaled(s, eh.rep, t.mono, t.coeff);
    if (eg.kind == GbElementKind::Generated)
      for (const auto& t : eh.v) s = G.add_scaled(s, eg.rep, t.mono, F.field().mul(neg, t.coeff));
    add_syzygy(std::move(s));
  }

  void process_pair(const Pair& p) {
    Deadline::check();
    const auto& F = gb_.module_;
    const auto& K = F.field();
    const auto& ea = gb_.entries_[p.a];
    Monomial qa = p.lcm.quotient(ea.v.front().mono);
    FreeElement s = F.scaled(ea.v, qa, 1);
    FreeElement rep;
    if (opt_.track) rep = gb_.gen_module_.scaled(ea.rep, qa, 1);
    auto neg = K.neg(1);
    if (p.b >= 0) {
      const auto& eb = gb_.entries_[p.b];
      Monomial qb = p.lcm.quotient(eb.v.front().mono);
      s = F.add_scaled(s, eb.v, qb, neg);
      if (opt_.track && eb.kind == GbElementKind::Generated)
        rep = gb_.gen_module_.add_scaled(rep, eb.rep, qb, neg);
    } else {
      const auto& poly = gb_.ring_[-(p.b + 1)];
      Monomial qb = p.lcm.quotient(poly.lead().mono);
      FreeElement pv = F.basis_times(p.comp, poly);
      s = F.add_scaled(s, pv, qb, neg);
    }
    FreeElement r = gb_.reduce(std::move(s), opt_.track ? &rep : nullptr);
    if (!r.empty()) {
      insert(std::move(r), std::move(rep));
    } else if (opt_.track) {
      add_syzygy(std::move(rep));
    }
  }

  void interreduce() {
    const auto& F = gb_.module_;
    for (std::size_t i = 0; i < gb_.entries_.size(); ++i) {
      auto& e = gb_.entries_[i];
      if (e.kind != GbElementKind::Generated || e.v.size() < 2) continue;
      FreeElement tail(e.v.begin() + 1, e.v.end());
      FreeElement acc;
      FreeElement r = gb_.reduce(std::move(tail), opt_.track ? &acc : nullptr);
      FreeElement nv;
      nv.reserve(r.size() + 1);
      nv.push_back(e.v.front());
      nv.insert(nv.end(), r.begin(), r.end());
      e.v = std::move(nv);
      if (opt_.track) e.rep = gb_.gen_module_.add(e.rep, acc);
    }
    (void)F;
  }

  GbOptions opt_;
  const std::vector<FreeElement>& gens_;
  std::vector<int> gen_degrees_;
  GroebnerBasis gb_;
  GroebnerBasis ring_only_;
  std::vector<std::vector<Pair>> pending_;
  std::map<int, std::size_t> degree_count_;
  std::vector<FreeElement> syz_;
};

GbResult groebner(const FreeModule& F, const std::vector<Polynomial>& ring,
                  const std::vector<FreeElement>& gens, const GbOptions& options,
                  const GroebnerBasis* base) {
  GbBuilder b(F, ring, base, gens, options);
  return b.run();
}

std::vector<Polynomial> ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  FreeModule F(ring, {0});
  std::vector<FreeElement> vs;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw std::invalid_argument("inhomogeneous generator " + g.to_string());
    vs.push_back(F.basis_times(0, g));
  }
  auto res = groebner(F, {}, vs);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < res.basis.size(); ++i) out.push_back(F.component(res.basis.element(i), 0));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return PolyRing::compare(a.lead().mono, b.lead().mono) < 0;
  });
  return out;
}

Polynomial reduce_polynomial(const Polynomial& f, const std::vector<Polynomial>& gb) {
  FreeModule F(f.ring(), {0});
  auto G = GroebnerBasis::assume(F, gb, {});
  return F.component(G.normal_form(F.basis_times(0, f)), 0);
}

std::vector<FreeElement> syzygies(const FreeModule& F, const std::vector<Polynomial>& ring,
                                  const std::vector<FreeElement>& columns, bool minimize) {
  GbOptions opt;
  opt.track = true;
  opt.reduce_tails = false;
  auto res = groebner(F, ring, columns, opt);
  if (!minimize) return res.syzygies;
  const auto& G = res.basis.generator_module();
  auto m = groebner(G, ring, res.syzygies, {});
  std::vector<FreeElement> out;
  for (std::size_t i = 0; i < res.syzygies.size(); ++i)
    if (m.minimal[i]) out.push_back(res.syzygies[i]);
  return out;
}

bool verify_groebner(const GroebnerBasis& G) {
  const auto& F = G.module();
  const auto& K = F.field();
  const PolyRing& R = *F.ring();
  auto neg = K.neg(1);
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto& a = G.element(i);
    if (a.empty() || a.front().coeff != 1) return false;
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const auto& b = G.element(j);
      if (a.front().comp != b.front().comp) continue;
      Monomial l = R.lcm(a.front().mono, b.front().mono);
      auto s = F.add_scaled(F.scaled(a, l.quotient(a.front().mono), 1), b,
                            l.quotient(b.front().mono), neg);
      if (!G.normal_form(s).empty()) return false;
    }
    for (const auto& p : G.ring_basis()) {
      Monomial l = R.lcm(a.front().mono, p.lead().mono);
      auto s = F.add_scaled(F.scaled(a, l.quotient(a.front().mono), 1),
                            F.basis_times(a.front().comp, p), l.quotient(p.lead().mono), neg);
      if (!G.normal_form(s).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomial ideals

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return PolyRing::compare(a, b) < 0; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

int monomial_dimension(const PolyRing& ring, const std::vector<Monomial>& gens_in) {
  auto gens = minimize_monomials(gens_in);
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  const int n = ring.num_vars();
  std::vector<unsigned> supports;
  for (const auto& g : gens) {
    unsigned s = 0;
    for (int i = 0; i < n; ++i)
      if (g.exponent(i)) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned S = 0; S < (1u << n); ++S) {
    int size = std::popcount(S);
    if (size <= best) continue;
    bool ok = true;
    for (unsigned s : supports)
      if ((s & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

LaurentPoly LaurentPoly::monomial(int exponent, long long coeff) {
  LaurentPoly p;
  p.add(exponent, coeff);
  return p;
}

void LaurentPoly::add(int e, long long v) {
  if (v == 0) return;
  auto& x = c_[e];
  x += v;
  if (x == 0) c_.erase(e);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, v] : o.c_) r.add(e, v);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, v] : o.c_) r.add(e, -v);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, v1] : c_)
    for (auto [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r;
  for (auto [e, v] : c_) r.c_[e + s] = v;
  return r;
}

long long LaurentPoly::at(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto [e, v] : c_) {
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    s += std::to_string(v < 0 ? -v : v);
    if (e != 0) s += "*t^" + std::to_string(e);
  }
  return s;
}

std::vector<long long> HilbertSeries::values(int lo, int hi) const {
  // expand 1/prod(1 - t^w) as a power series up to hi - min exponent
  std::vector<long long> out;
  if (hi < lo) return out;
  int minexp = numerator.is_zero() ? 0 : numerator.coeffs().begin()->first;
  int len = hi - std::min(minexp, lo) + 1;
  if (len < 1) len = 1;
  std::vector<long long> denom_inv(len, 0);
  denom_inv[0] = 1;
  for (int w : weights)
    for (int k = w; k < len; ++k) denom_inv[k] += denom_inv[k - w];
  for (int d = lo; d <= hi; ++d) {
    long long v = 0;
    for (auto [e, c] : numerator.coeffs()) {
      int k = d - e;
      if (k >= 0 && k < len) v += c * denom_inv[k];
    }
    out.push_back(v);
  }
  return out;
}

int HilbertSeries::dimension() const {
  if (numerator.is_zero()) return -1;
  // divide by (1 - t) while the value at t = 1 vanishes
  int lo = numerator.coeffs().begin()->first;
  std::vector<long long> c;
  for (auto [e, v] : numerator.coeffs()) {
    c.resize(e - lo + 1, 0);
    c[e - lo] = v;
  }
  int order = 0;
  while (true) {
    long long sum = 0;
    for (long long v : c) sum += v;
    if (sum != 0 || c.empty()) break;
    // q(t) with c = (1 - t) q: q_k = sum_{i<=k} c_i
    std::vector<long long> q(c.size() - 1);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      run += c[k];
      q[k] = run;
    }
    c = std::move(q);
    ++order;
  }
  return static_cast<int>(weights.size()) - order;
}

namespace {

LaurentPoly hilbert_rec(const PolyRing& ring, std::vector<Monomial> gens) {
  gens = minimize_monomials(std::move(gens));
  if (gens.empty()) return LaurentPoly::monomial(0);
  for (const auto& g : gens)
    if (g.is_one()) return {};
  // pairwise coprime generators: product formula
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    LaurentPoly r = LaurentPoly::monomial(0);
    for (const auto& g : gens) r = r * (LaurentPoly::monomial(0) - LaurentPoly::monomial(g.degree()));
    return r;
  }
  // pivot on the variable occurring in most non-linear generators
  const int n = ring.num_vars();
  int best = -1, best_count = 0;
  for (int v = 0; v < n; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.exponent(v) > 0) ++count;
    if (count > best_count && count >= 2) {
      best = v;
      best_count = count;
    }
  }
  Monomial x = ring.var(best);
  std::vector<Monomial> with_x = gens;
  with_x.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g.exponent(best) > 0 ? g.quotient(x) : g);
  return hilbert_rec(ring, std::move(with_x)) +
         hilbert_rec(ring, std::move(colon)).shifted(x.degree());
}

}  // namespace

LaurentPoly hilbert_numerator(const PolyRing& ring, std::vector<Monomial> gens) {
  return hilbert_rec(ring, std::move(gens));
}

HilbertSeries hilbert_series(const GroebnerBasis& G) {
  HilbertSeries hs;
  hs.weights = G.module().ring()->weights();
  auto leads = G.lead_monomials();
  for (std::size_t c = 0; c < leads.size(); ++c)
    hs.numerator = hs.numerator +
                   hilbert_numerator(*G.module().ring(), leads[c]).shifted(G.module().degree(c));
  return hs;
}

int module_dimension(const GroebnerBasis& G) {
  auto leads = G.lead_monomials();
  int d = -1;
  for (const auto& L : leads) d = std::max(d, monomial_dimension(*G.module().ring(), L));
  return d;
}

}  // namespace sdw
