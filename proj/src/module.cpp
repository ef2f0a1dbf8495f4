#include "sdw/module.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sdw/deadline.hpp"
#include "sdw/linalg.hpp"

namespace sdw {

struct ModuleAccess {
  static void preset(PresentedModule& M, std::shared_ptr<const GroebnerBasis> gb, bool minimal) {
    M.d_->minimal = minimal;
    std::call_once(M.d_->once, [&] { M.d_->gb = std::move(gb); });
  }
};

namespace {

FreeElement shift_components(const FreeElement& v, std::uint32_t offset) {
  FreeElement out = v;
  for (auto& t : out) t.comp += offset;
  return out;
}

// Block copies of the elements of a Gröbner basis of N inside N^blocks.
GroebnerBasis block_basis(const FreeModule& big, const GroebnerBasis& N, int blocks) {
  std::vector<FreeElement> els;
  const auto r = static_cast<std::uint32_t>(N.module().rank());
  for (int b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < N.size(); ++i) els.push_back(big.import(shift_components(N.element(i), b * r)));
  return GroebnerBasis::assume(big, N.ring_basis(), std::move(els));
}

FreeElement project(const FreeModule& target, const FreeElement& v,
                    const std::vector<FreeElement>& rows) {
  FreeElement out;
  for (const auto& t : v) out = target.add_scaled(out, rows[t.comp], t.mono, t.coeff);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PresentedModule

PresentedModule::PresentedModule(QRingPtr ring, std::vector<int> degrees,
                                 std::vector<FreeElement> relations)
    : d_(std::make_shared<Data>()) {
  d_->ring = std::move(ring);
  d_->F = FreeModule(d_->ring->poly_ring(), std::move(degrees));
  for (auto& r : relations) {
    if (r.empty()) continue;
    r = d_->F.import(r);
    d_->F.normalize(r);
    if (r.empty()) continue;
    if (!d_->F.homogeneous_degree(r))
      throw std::invalid_argument("inhomogeneous relation " + d_->F.to_string(r));
    d_->relations.push_back(std::move(r));
  }
}

PresentedModule PresentedModule::from_matrix(QRingPtr ring, std::vector<int> degrees,
                                             const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != degrees.size()) throw std::invalid_argument("matrix row count differs from generator count");
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("ragged relation matrix");
  FreeModule F(ring->poly_ring(), degrees);
  std::vector<FreeElement> rels;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Polynomial> col;
    for (const auto& r : rows) col.push_back(r[j]);
    rels.push_back(F.from_components(col));
  }
  return PresentedModule(std::move(ring), std::move(degrees), std::move(rels));
}

PresentedModule PresentedModule::free(QRingPtr ring, std::vector<int> degrees) {
  PresentedModule M(std::move(ring), std::move(degrees), {});
  return M;
}

PresentedModule PresentedModule::residue_field(QRingPtr ring) {
  FreeModule F(ring->poly_ring(), {0});
  std::vector<FreeElement> rels;
  for (int i = 0; i < ring->num_vars(); ++i)
    rels.push_back(F.basis_times(0, Polynomial::variable(ring->poly_ring(), i)));
  return PresentedModule(std::move(ring), {0}, std::move(rels));
}

std::vector<std::vector<Polynomial>> PresentedModule::matrix() const {
  std::vector<std::vector<Polynomial>> rows(rank());
  for (const auto& r : relations()) {
    auto comps = free_module().components(r);
    for (int i = 0; i < rank(); ++i) rows[i].push_back(comps[i]);
  }
  return rows;
}

const GroebnerBasis& PresentedModule::gb() const {
  std::call_once(d_->once, [this] {
    auto res = groebner(d_->F, d_->ring->ideal_basis(), d_->relations);
    d_->gb = std::make_shared<const GroebnerBasis>(std::move(res.basis));
  });
  return *d_->gb;
}

bool PresentedModule::is_zero() const {
  for (int i = 0; i < rank(); ++i)
    if (!is_zero(free_module().basis(i))) return false;
  return true;
}

bool PresentedModule::is_free() const { return gb().size() == 0; }

PresentedModule PresentedModule::twist(int s) const {
  std::vector<int> degs = degrees();
  for (auto& d : degs) d -= s;
  PresentedModule M(ring(), std::move(degs), relations());
  M.d_->minimal = d_->minimal;
  return M;
}

std::string PresentedModule::to_string() const {
  std::string s = "coker(degrees [";
  for (int i = 0; i < rank(); ++i) s += (i ? ", " : "") + std::to_string(degrees()[i]);
  s += "]; relations [";
  for (std::size_t j = 0; j < relations().size(); ++j)
    s += (j ? ", " : "") + free_module().to_string(relations()[j]);
  return s + "])";
}

PresentedModule direct_sum(const std::vector<PresentedModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no modules");
  std::vector<int> degs;
  std::vector<FreeElement> rels;
  for (const auto& M : parts) {
    auto offset = static_cast<std::uint32_t>(degs.size());
    degs.insert(degs.end(), M.degrees().begin(), M.degrees().end());
    for (const auto& r : M.relations()) rels.push_back(shift_components(r, offset));
  }
  return PresentedModule(parts.front().ring(), std::move(degs), std::move(rels));
}

// ---------------------------------------------------------------------------
// ModuleMap

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, std::vector<FreeElement> images,
                     int degree)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), degree_(degree) {
  if (static_cast<int>(images_.size()) != source_.rank())
    throw std::invalid_argument("map needs one image per source generator");
  for (auto& v : images_) {
    v = target_.free_module().import(v);
    target_.free_module().normalize(v);
  }
}

ModuleMap ModuleMap::identity(const PresentedModule& M) {
  std::vector<FreeElement> imgs;
  for (int i = 0; i < M.rank(); ++i) imgs.push_back(M.free_module().basis(i));
  return ModuleMap(M, M, std::move(imgs));
}

ModuleMap ModuleMap::zero(const PresentedModule& M, const PresentedModule& N, int degree) {
  return ModuleMap(M, N, std::vector<FreeElement>(M.rank()), degree);
}

FreeElement ModuleMap::apply(const FreeElement& v) const {
  FreeElement out;
  const auto& T = target_.free_module();
  for (const auto& t : v) out = T.add_scaled(out, images_[t.comp], t.mono, t.coeff);
  return out;
}

bool ModuleMap::is_well_defined() const {
  const auto& T = target_.free_module();
  for (int i = 0; i < source_.rank(); ++i) {
    if (images_[i].empty()) continue;
    auto d = T.homogeneous_degree(images_[i]);
    if (!d || *d != source_.degrees()[i] + degree_) return false;
  }
  for (const auto& r : source_.relations())
    if (!target_.is_zero(apply(r))) return false;
  return true;
}

bool ModuleMap::is_zero() const {
  return std::all_of(images_.begin(), images_.end(),
                     [&](const FreeElement& v) { return target_.is_zero(v); });
}

std::string ModuleMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i)
    s += (i ? ", " : "") + target_.free_module().to_string(images_[i]);
  return s + "]";
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  std::vector<FreeElement> imgs;
  imgs.reserve(f.images().size());
  for (const auto& v : f.images()) imgs.push_back(g.apply(v));
  return ModuleMap(f.source(), g.target(), std::move(imgs), f.degree() + g.degree());
}

// ---------------------------------------------------------------------------
// Subquotients

std::optional<FreeElement> Subquotient::lift(const FreeElement& v) const {
  auto c = lifter->lift(v);
  if (!c) return std::nullopt;
  return project(module.free_module(), *c, projection);
}

Subquotient subquotient(const QRingPtr& ring, const FreeModule& F, const std::vector<FreeElement>& A,
                        const GroebnerBasis& B) {
  GbOptions opt;
  opt.track = true;
  auto res = groebner(F, ring->ideal_basis(), A, opt, &B);

  std::vector<int> pos(A.size(), -1);
  std::vector<int> degs;
  Subquotient out;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (res.minimal[i]) {
      pos[i] = static_cast<int>(degs.size());
      degs.push_back(*F.homogeneous_degree(A[i]));
      out.generators.push_back(A[i]);
    }
  FreeModule G(ring->poly_ring(), degs);
  out.projection.resize(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (pos[i] >= 0) {
      out.projection[i] = G.basis(pos[i]);
    } else if (!A[i].empty()) {
      auto c = res.basis.lift(A[i]);
      if (!c) throw std::logic_error("subquotient: non-minimal generator failed to lift");
      FreeElement row;
      for (const auto& t : *c) {
        if (pos[t.comp] < 0) throw std::logic_error("subquotient: lift used a non-minimal generator");
        row.push_back({t.mono, static_cast<std::uint32_t>(pos[t.comp]), t.coeff});
      }
      out.projection[i] = G.import(row);
    }
  }
  std::vector<FreeElement> rels;
  for (const auto& s : res.syzygies) {
    auto p = project(G, s, out.projection);
    if (!p.empty()) rels.push_back(std::move(p));
  }
  auto mres = groebner(G, ring->ideal_basis(), rels);
  std::vector<FreeElement> minimal_rels;
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (mres.minimal[i]) minimal_rels.push_back(rels[i]);
  out.module = PresentedModule(ring, degs, std::move(minimal_rels));
  ModuleAccess::preset(out.module, std::make_shared<const GroebnerBasis>(std::move(mres.basis)), true);
  out.lifter = std::make_shared<const GroebnerBasis>(std::move(res.basis));
  return out;
}

ModuleWithMap kernel(const ModuleMap& f) {
  const auto& S = f.source();
  const auto& T = f.target();
  GbOptions opt;
  opt.track = true;
  opt.reduce_tails = false;
  opt.generator_degrees = S.degrees();
  for (auto& d : opt.generator_degrees) d += f.degree();
  auto res = groebner(T.free_module(), T.ring()->ideal_basis(), f.images(), opt, &T.gb());
  std::vector<FreeElement> syz;
  for (const auto& s : res.syzygies) syz.push_back(S.free_module().import(s));
  auto sub = subquotient(S.ring(), S.free_module(), syz, S.gb());
  ModuleMap inc(sub.module, S, sub.generators);
  return {sub.module, inc};
}

ModuleWithMap image(const ModuleMap& f) {
  const auto& T = f.target();
  auto sub = subquotient(T.ring(), T.free_module(), f.images(), T.gb());
  ModuleMap inc(sub.module, T, sub.generators);
  return {sub.module, inc};
}

ModuleWithMap cokernel(const ModuleMap& f) {
  const auto& T = f.target();
  std::vector<FreeElement> rels = T.relations();
  rels.insert(rels.end(), f.images().begin(), f.images().end());
  PresentedModule Q(T.ring(), T.degrees(), std::move(rels));
  auto mp = minimal_presentation(Q);
  ModuleMap proj(T, mp.module, mp.from_original.images());
  return {mp.module, proj};
}

MinimalPresentation minimal_presentation(const PresentedModule& M) {
  if (M.is_minimal()) return {M, ModuleMap::identity(M), ModuleMap::identity(M)};
  std::vector<FreeElement> basis;
  for (int i = 0; i < M.rank(); ++i) basis.push_back(M.free_module().basis(i));
  auto sub = subquotient(M.ring(), M.free_module(), basis, M.gb());
  ModuleMap to(sub.module, M, sub.generators);
  ModuleMap from(M, sub.module, sub.projection);
  return {sub.module, to, from};
}

int mu(const PresentedModule& M) { return minimal_presentation(M).module.rank(); }

// ---------------------------------------------------------------------------
// Hom

HomModule::HomModule(const PresentedModule& M, const PresentedModule& N)
    : M_(M), N_(N), Mmin_(minimal_presentation(M)) {
  const auto& Mp = Mmin_.module;
  const auto& P = M.ring()->poly_ring();
  const int g0 = Mp.rank();
  const int rN = N.rank();
  const auto& rels = Mp.relations();
  const int g1 = static_cast<int>(rels.size());

  std::vector<int> d0, d1;
  for (int i = 0; i < g0; ++i)
    for (int u = 0; u < rN; ++u) d0.push_back(N.degrees()[u] - Mp.degrees()[i]);
  for (int j = 0; j < g1; ++j) {
    int c = *Mp.free_module().homogeneous_degree(rels[j]);
    for (int u = 0; u < rN; ++u) d1.push_back(N.degrees()[u] - c);
  }
  H0_ = FreeModule(P, d0);
  FreeModule H1(P, d1);
  auto base0 = block_basis(H0_, N.gb(), g0);
  auto base1 = block_basis(H1, N.gb(), g1);

  std::vector<FreeElement> imgs;
  for (int i = 0; i < g0; ++i)
    for (int u = 0; u < rN; ++u) {
      FreeElement v;
      for (int j = 0; j < g1; ++j)
        for (const auto& t : rels[j])
          if (static_cast<int>(t.comp) == i)
            v.push_back({t.mono, static_cast<std::uint32_t>(j * rN + u), t.coeff});
      H1.normalize(v);
      imgs.push_back(std::move(v));
    }
  std::vector<FreeElement> ker;
  if (g1 == 0) {
    for (int k = 0; k < g0 * rN; ++k) ker.push_back(H0_.basis(k));
  } else {
    GbOptions opt;
    opt.track = true;
    opt.reduce_tails = false;
    opt.generator_degrees = d0;
    auto res = groebner(H1, M.ring()->ideal_basis(), imgs, opt, &base1);
    for (const auto& s : res.syzygies) ker.push_back(H0_.import(s));
  }
  sub_ = subquotient(M.ring(), H0_, ker, base0);
  for (std::size_t l = 0; l < sub_.generators.size(); ++l)
    dictionary_.push_back(evaluate(sub_.module.free_module().basis(static_cast<std::uint32_t>(l))));
}

ModuleMap HomModule::evaluate(const FreeElement& coords) const {
  const auto& Mp = Mmin_.module;
  const int rN = N_.rank();
  FreeElement v;
  for (const auto& t : coords) v = H0_.add_scaled(v, sub_.generators[t.comp], t.mono, t.coeff);
  std::vector<FreeElement> on_min(Mp.rank());
  for (const auto& t : v) on_min[t.comp / rN].push_back({t.mono, t.comp % rN, t.coeff});
  int deg = 0;
  if (!coords.empty()) deg = *module().free_module().homogeneous_degree(coords);
  ModuleMap hmin(Mp, N_, std::move(on_min), deg);
  return compose(hmin, Mmin_.from_original);
}

FreeElement HomModule::pack(const std::vector<FreeElement>& images_on_minimal) const {
  const int rN = N_.rank();
  FreeElement v;
  for (std::size_t i = 0; i < images_on_minimal.size(); ++i)
    for (const auto& t : images_on_minimal[i])
      v.push_back({t.mono, static_cast<std::uint32_t>(i * rN + t.comp), t.coeff});
  H0_.normalize(v);
  return v;
}

std::optional<FreeElement> HomModule::lift(const ModuleMap& h) const {
  auto hmin = compose(h, Mmin_.to_original);
  return sub_.lift(pack(hmin.images()));
}

ModuleMap hom_source_map(const ModuleMap& t, const HomModule& H2, const HomModule& H1) {
  std::vector<FreeElement> imgs;
  for (std::size_t l = 0; l < H2.size(); ++l) {
    auto c = H1.lift(compose(H2.dictionary(l), t));
    if (!c) throw std::logic_error("composite homomorphism failed to lift");
    imgs.push_back(std::move(*c));
  }
  return ModuleMap(H2.module(), H1.module(), std::move(imgs), t.degree());
}

ModuleMap hom_target_map(const ModuleMap& t, const HomModule& H1, const HomModule& H2) {
  std::vector<FreeElement> imgs;
  for (std::size_t l = 0; l < H1.size(); ++l) {
    auto c = H2.lift(compose(t, H1.dictionary(l)));
    if (!c) throw std::logic_error("composite homomorphism failed to lift");
    imgs.push_back(std::move(*c));
  }
  return ModuleMap(H1.module(), H2.module(), std::move(imgs), t.degree());
}

// ---------------------------------------------------------------------------
// Fitting ideals

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& A, const std::vector<int>& rows,
                       const std::vector<int>& cols, const RingPtr& P) {
  if (rows.empty()) return Polynomial::constant(P, 1);
  if (rows.size() == 1) return A[rows[0]][cols[0]];
  Polynomial acc(P);
  std::vector<int> rest_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& a = A[rows[0]][cols[k]];
    if (a.is_zero()) continue;
    std::vector<int> rest_cols;
    for (std::size_t m = 0; m < cols.size(); ++m)
      if (m != k) rest_cols.push_back(cols[m]);
    auto minor = a * determinant(A, rest_rows, rest_cols, P);
    acc = (k % 2 == 0) ? acc + minor : acc - minor;
  }
  return acc;
}

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Polynomial> fitting_ideal(const PresentedModule& M, int j) {
  const auto& R = M.ring();
  const auto& P = R->poly_ring();
  auto mp = minimal_presentation(M);
  const int g = mp.module.rank();
  const int k = g - j;
  std::vector<Polynomial> gens = R->generators();
  if (k <= 0) return {Polynomial::constant(P, 1)};
  auto A = mp.module.matrix();
  const int r = A.empty() ? 0 : static_cast<int>(A[0].size());
  if (r >= k) {
    std::vector<std::vector<int>> row_sets, col_sets;
    std::vector<int> cur;
    choose(g, k, 0, cur, row_sets);
    choose(r, k, 0, cur, col_sets);
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) {
        Deadline::check();
        auto d = R->reduce(determinant(A, rs, cs, P));
        if (!d.is_zero()) gens.push_back(d);
      }
  }
  return ideal_groebner(P, gens);
}

// ---------------------------------------------------------------------------
// Isomorphism testing

std::vector<Monomial> standard_monomials(const QuotientRing& R, int degree) {
  const auto& P = *R.poly_ring();
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const int n = P.num_vars();
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n) {
      if (left != 0) return;
      Monomial m = P.make(e);
      for (const auto& g : R.ideal_basis())
        if (g.lead().mono.divides(m)) return;
      out.push_back(m);
      return;
    }
    const int w = P.weights()[var];
    for (int a = 0; a * w <= left && a <= Monomial::kMaxExponent; ++a) {
      e[var] = a;
      self(self, var + 1, left - a * w);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

namespace {

// Rank of the scalar part of f: M -> N' where N' is minimally presented.
int scalar_rank(const ModuleMap& f) {
  const auto& T = f.target();
  const auto& F = T.ring()->field();
  DenseMatrix A(F, T.rank(), f.source().rank());
  for (int i = 0; i < f.source().rank(); ++i)
    for (const auto& t : f.images()[i])
      if (t.mono.is_one()) A.at(static_cast<int>(t.comp), i) = t.coeff;
  return A.rank();
}

}  // namespace

IsoResult is_isomorphic(const PresentedModule& M, const PresentedModule& N, int trials,
                        std::uint64_t seed) {
  IsoResult out;
  auto hm = M.hilbert_series(), hn = N.hilbert_series();
  if (!(hm == hn)) {
    out.verdict = Tri::False;
    out.certificate = "Hilbert series numerators differ: " + hm.numerator.to_string() + " vs " +
                      hn.numerator.to_string();
    return out;
  }
  auto mm = minimal_presentation(M), mn = minimal_presentation(N);
  int a = mm.module.rank(), b = mn.module.rank();
  if (a != b) {
    out.verdict = Tri::False;
    out.certificate = "minimal generator counts differ: " + std::to_string(a) + " vs " + std::to_string(b);
    return out;
  }
  if (a == 0) {
    out.verdict = Tri::True;
    out.certificate = "both modules are zero";
    out.witness = ModuleMap::zero(M, N);
    return out;
  }
  HomModule H(mm.module, mn.module);
  const auto& R = *M.ring();
  const auto& HF = H.module().free_module();
  struct Cand {
    std::uint32_t gen;
    Monomial m;
  };
  std::vector<Cand> cands;
  for (int l = 0; l < H.module().rank(); ++l) {
    int d = H.module().degrees()[l];
    if (d > 0) continue;
    for (const auto& m : standard_monomials(R, -d)) cands.push_back({static_cast<std::uint32_t>(l), m});
  }
  if (cands.empty()) {
    out.verdict = Tri::False;
    out.certificate = "no homomorphisms of degree 0";
    return out;
  }
  std::mt19937_64 rng(seed);
  const auto& F = R.field();
  for (int trial = 0; trial < trials; ++trial) {
    FreeElement coords;
    for (const auto& c : cands) {
      auto x = static_cast<PrimeField::Elem>(rng() % F.characteristic());
      coords.push_back({c.m, c.gen, x});
    }
    HF.normalize(coords);
    auto f = H.evaluate(coords);  // mm.module -> mn.module
    if (scalar_rank(f) == b) {
      out.verdict = Tri::True;
      out.certificate = "surjective degree-0 map between modules with equal Hilbert series";
      out.witness = compose(mn.to_original, compose(f, mm.from_original));
      return out;
    }
  }
  out.verdict = Tri::Unknown;
  out.certificate = "no invertible map found in " + std::to_string(trials) + " random trials";
  return out;
}

PresentedModule CPower::module() const {
  if (twists.empty()) return PresentedModule::zero(base.ring());
  std::vector<PresentedModule> parts;
  for (int t : twists) parts.push_back(base.twist(t));
  return direct_sum(parts);
}

}  // namespace sdw
