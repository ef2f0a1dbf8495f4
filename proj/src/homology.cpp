#include "sdw/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "sdw/deadline.hpp"

namespace sdw {

namespace {

HilbertSeries minus(const HilbertSeries& a, const HilbertSeries& b) {
  return {a.numerator - b.numerator, a.weights};
}

GroebnerBasis blocks_of(const FreeModule& big, const GroebnerBasis& N, int blocks) {
  std::vector<FreeElement> els;
  const auto r = static_cast<std::uint32_t>(N.module().rank());
  for (int b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < N.size(); ++i) {
      FreeElement v = N.element(i);
      for (auto& t : v) t.comp += b * r;
      els.push_back(big.import(v));
    }
  return GroebnerBasis::assume(big, N.ring_basis(), std::move(els));
}

// Minimal (or all) syzygies of the columns, as elements of the free module
// with the given degrees.
std::vector<FreeElement> syzygy_step(const QRingPtr& R, const FreeModule& target,
                                     const std::vector<FreeElement>& cols, const FreeModule& source,
                                     bool minimal) {
  GbOptions opt;
  opt.track = true;
  opt.reduce_tails = false;
  opt.generator_degrees = source.degrees();
  auto res = groebner(target, R->ideal_basis(), cols, opt);
  std::vector<FreeElement> syz;
  for (const auto& s : res.syzygies) syz.push_back(source.import(s));
  if (!minimal) return syz;
  auto m = groebner(source, R->ideal_basis(), syz, {});
  std::vector<FreeElement> out;
  for (std::size_t i = 0; i < syz.size(); ++i)
    if (m.minimal[i]) out.push_back(std::move(syz[i]));
  return out;
}

std::vector<int> element_degrees(const FreeModule& F, const std::vector<FreeElement>& els) {
  std::vector<int> d;
  for (const auto& v : els) d.push_back(*F.homogeneous_degree(v));
  return d;
}

}  // namespace

bool Complex::d_squared_zero() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!compose(maps[i], maps[i + 1]).is_zero()) return false;
  return true;
}

bool Complex::is_exact_at(int i) const {
  if (i < 1 || i >= length()) throw std::out_of_range("exactness needs maps on both sides");
  const auto& Fi = terms[i];
  auto K = kernel(maps[i - 1]);
  auto im = groebner(Fi.free_module(), Fi.ring()->ideal_basis(), maps[i].images());
  for (const auto& v : K.map.images())
    if (!im.basis.normal_form(v).empty()) return false;
  return true;
}

Resolution free_resolution(const PresentedModule& M, int length, bool minimal) {
  const auto& R = M.ring();
  Resolution out;
  PresentedModule base = M;
  ModuleMap to = ModuleMap::identity(M);
  if (minimal) {
    auto mp = minimal_presentation(M);
    base = mp.module;
    to = mp.to_original;
  }
  auto F0 = PresentedModule::free(R, base.degrees());
  out.complex.terms.push_back(F0);
  out.augmentation = ModuleMap(F0, M, to.images());
  std::vector<FreeElement> cols = base.relations();
  for (int k = 1; k <= length; ++k) {
    Deadline::check();
    const PresentedModule prev = out.complex.terms.back();
    if (cols.empty()) {
      out.finite = true;
      break;
    }
    auto Fk = PresentedModule::free(R, element_degrees(prev.free_module(), cols));
    out.complex.terms.push_back(Fk);
    out.complex.maps.emplace_back(Fk, prev, cols);
    if (k == length) break;
    cols = syzygy_step(R, prev.free_module(), cols, Fk.free_module(), minimal);
  }
  if (cols.empty()) out.finite = true;
  return out;
}

// ---------------------------------------------------------------------------
// Ext

ExtComputer::ExtComputer(const PresentedModule& M, const PresentedModule& N, int max_index,
                         bool minimal)
    : N_(N), max_index_(max_index), res_(free_resolution(M, max_index + 1, minimal)) {}

ExtComputer::HomTerm& ExtComputer::term(int i) {
  auto it = terms_.find(i);
  if (it != terms_.end()) return it->second;
  std::vector<int> fdeg;
  if (i >= 0 && i < static_cast<int>(res_.complex.terms.size())) fdeg = res_.complex.terms[i].degrees();
  std::vector<int> d;
  for (int b : fdeg)
    for (int u : N_.degrees()) d.push_back(u - b);
  HomTerm t;
  t.H = FreeModule(N_.ring()->poly_ring(), d);
  t.block = std::make_shared<GroebnerBasis>(blocks_of(t.H, N_.gb(), static_cast<int>(fdeg.size())));
  auto hn = N_.hilbert_series();
  t.free_series.weights = hn.weights;
  for (int b : fdeg) t.free_series.numerator = t.free_series.numerator + hn.numerator.shifted(-b);
  return terms_.emplace(i, std::move(t)).first->second;
}

const std::vector<FreeElement>& ExtComputer::dual_images(int i) {
  auto it = images_.find(i);
  if (it != images_.end()) return it->second;
  const auto& Hi = term(i).H;
  const auto& Hn = term(i + 1).H;
  const int rN = N_.rank();
  std::vector<FreeElement> imgs(Hi.rank());
  if (Hn.rank() > 0) {
    const auto& d = res_.complex.maps[i];  // F_{i+1} -> F_i
    for (std::size_t bp = 0; bp < d.images().size(); ++bp)
      for (const auto& t : d.images()[bp])
        for (int u = 0; u < rN; ++u)
          imgs[t.comp * rN + u].push_back({t.mono, static_cast<std::uint32_t>(bp * rN + u), t.coeff});
    for (auto& v : imgs) Hn.normalize(v);
  }
  return images_.emplace(i, std::move(imgs)).first->second;
}

const GroebnerBasis& ExtComputer::image_basis(int i) {
  auto it = image_gb_.find(i);
  if (it != image_gb_.end()) return it->second;
  const auto& imgs = dual_images(i);
  auto& T = term(i + 1);
  auto res = groebner(T.H, N_.ring()->ideal_basis(), imgs, {}, T.block.get());
  return image_gb_.emplace(i, std::move(res.basis)).first->second;
}

HilbertSeries ExtComputer::series(int i) {
  if (i < 0 || i > max_index_) throw std::out_of_range("Ext index outside the computed range");
  auto image_series = [this](int j) {
    return minus(term(j + 1).free_series, hilbert_series(image_basis(j)));
  };
  auto ker = minus(term(i).free_series, image_series(i));
  if (i == 0) return ker;
  return minus(ker, image_series(i - 1));
}

PresentedModule ExtComputer::module(int i) {
  if (i < 0 || i > max_index_) throw std::out_of_range("Ext index outside the computed range");
  auto& Ti = term(i);
  auto& Tn = term(i + 1);
  std::vector<FreeElement> ker;
  if (Tn.H.rank() == 0) {
    for (int k = 0; k < Ti.H.rank(); ++k) ker.push_back(Ti.H.basis(k));
  } else {
    GbOptions opt;
    opt.track = true;
    opt.reduce_tails = false;
    opt.generator_degrees = Ti.H.degrees();
    auto res = groebner(Tn.H, N_.ring()->ideal_basis(), dual_images(i), opt, Tn.block.get());
    for (const auto& s : res.syzygies) ker.push_back(Ti.H.import(s));
  }
  const GroebnerBasis& B = i > 0 ? image_basis(i - 1) : *Ti.block;
  return subquotient(N_.ring(), Ti.H, ker, B).module;
}

PresentedModule ext_module(int i, const PresentedModule& M, const PresentedModule& N) {
  if (i < 0) throw std::invalid_argument("negative Ext index");
  ExtComputer E(M, N, i);
  return E.module(i);
}

// ---------------------------------------------------------------------------
// Duals and natural maps

PresentedModule c_dual(const PresentedModule& M, const PresentedModule& C) {
  return HomModule(M, C).module();
}

Homothety homothety_map(const PresentedModule& C) {
  auto H = std::make_shared<HomModule>(C, C);
  auto id = H->lift(ModuleMap::identity(C));
  if (!id) throw std::logic_error("identity failed to lift into Hom(C, C)");
  auto Rm = PresentedModule::ring_module(C.ring());
  return {ModuleMap(Rm, H->module(), {*id}), H};
}

LambdaMap lambda_map(const PresentedModule& M, const PresentedModule& C) {
  auto D = std::make_shared<HomModule>(M, C);
  auto DD = std::make_shared<HomModule>(D->module(), C);
  std::vector<FreeElement> imgs;
  for (int i = 0; i < M.rank(); ++i) {
    std::vector<FreeElement> eval;
    for (std::size_t l = 0; l < D->size(); ++l) eval.push_back(D->dictionary(l).images()[i]);
    ModuleMap phi(D->module(), C, std::move(eval), M.degrees()[i]);
    auto c = DD->lift(phi);
    if (!c) throw std::logic_error("evaluation map failed to lift into the bidual");
    imgs.push_back(std::move(*c));
  }
  return {ModuleMap(M, DD->module(), std::move(imgs)), D, DD};
}

bool is_injective(const ModuleMap& f) { return kernel(f).module.is_zero(); }

bool is_surjective(const ModuleMap& f) {
  const auto& T = f.target();
  auto g = groebner(T.free_module(), T.ring()->ideal_basis(), f.images(), {}, &T.gb());
  for (int u = 0; u < T.rank(); ++u)
    if (!g.basis.normal_form(T.free_module().basis(u)).empty()) return false;
  return true;
}

bool is_isomorphism(const ModuleMap& f) { return is_surjective(f) && is_injective(f); }

PresentedModule transpose_C(const PresentedModule& M, const PresentedModule& C) {
  auto mp = minimal_presentation(M);
  const auto& Mp = mp.module;
  const auto& rels = Mp.relations();
  const int g1 = static_cast<int>(rels.size());
  if (g1 == 0) return PresentedModule::zero(M.ring());
  const int rC = C.rank();
  std::vector<int> d1;
  for (int j = 0; j < g1; ++j) {
    int c = *Mp.free_module().homogeneous_degree(rels[j]);
    for (int u = 0; u < rC; ++u) d1.push_back(C.degrees()[u] - c);
  }
  FreeModule H1(M.ring()->poly_ring(), d1);
  std::vector<FreeElement> out_rels;
  for (int j = 0; j < g1; ++j)
    for (const auto& r : C.relations()) {
      FreeElement v = r;
      for (auto& t : v) t.comp += j * rC;
      out_rels.push_back(H1.import(v));
    }
  for (int i = 0; i < Mp.rank(); ++i)
    for (int u = 0; u < rC; ++u) {
      FreeElement v;
      for (int j = 0; j < g1; ++j)
        for (const auto& t : rels[j])
          if (static_cast<int>(t.comp) == i)
            v.push_back({t.mono, static_cast<std::uint32_t>(j * rC + u), t.coeff});
      H1.normalize(v);
      if (!v.empty()) out_rels.push_back(std::move(v));
    }
  PresentedModule T(M.ring(), d1, std::move(out_rels));
  return minimal_presentation(T).module;
}

PresentedModule syzygy_module(const PresentedModule& M, int i) {
  if (i < 0) throw std::invalid_argument("negative syzygy index");
  if (i == 0) return M;
  auto res = free_resolution(M, i + 1);
  const auto& terms = res.complex.terms;
  if (static_cast<int>(terms.size()) <= i) return PresentedModule::zero(M.ring());
  std::vector<FreeElement> rels;
  if (static_cast<int>(res.complex.maps.size()) > i) rels = res.complex.maps[i].images();
  return minimal_presentation(PresentedModule(M.ring(), terms[i].degrees(), std::move(rels))).module;
}

IsoResult is_isomorphic_local(const PresentedModule& M, const PresentedModule& N, int trials,
                              std::uint64_t seed) {
  if (M.ring() != N.ring()) throw std::invalid_argument("modules live over different rings");
  IsoResult out;
  auto rm = free_resolution(M, 1), rn = free_resolution(N, 1);
  for (int i = 0; i <= 1; ++i) {
    auto rank = [i](const Resolution& r) {
      return i < static_cast<int>(r.complex.terms.size()) ? r.complex.terms[i].rank() : 0;
    };
    if (rank(rm) != rank(rn)) {
      out.verdict = Tri::False;
      out.certificate = "minimal Betti numbers b" + std::to_string(i) + " differ: " + std::to_string(rank(rm)) +
                        " vs " + std::to_string(rank(rn));
      return out;
    }
  }
  const int g = rm.complex.terms[0].rank();
  if (g == 0) {
    out.verdict = Tri::True;
    out.certificate = "both modules are zero";
    return out;
  }
  for (int j = 0; j < g; ++j) {
    auto a = fitting_ideal(M, j), b = fitting_ideal(N, j);
    auto inside = [](const std::vector<Polynomial>& x, const std::vector<Polynomial>& gb) {
      for (const auto& f : x)
        if (!reduce_polynomial(f, gb).is_zero()) return false;
      return true;
    };
    if (!inside(a, b) || !inside(b, a)) {
      out.verdict = Tri::False;
      out.certificate = "Fitting ideals Fitt_" + std::to_string(j) + " differ";
      return out;
    }
  }
  auto low = [](const Resolution& r) {
    const auto& d = r.complex.terms[0].degrees();
    return *std::min_element(d.begin(), d.end());
  };
  const int s = low(rn) - low(rm);
  auto graded = is_isomorphic(M, N.twist(s), trials, seed);
  if (graded.verdict == Tri::True) {
    out = graded;
    out.certificate = "graded isomorphism onto N(" + std::to_string(s) + ")";
    return out;
  }
  out.verdict = Tri::Unknown;
  out.certificate = "Betti numbers and Fitting ideals agree; no graded isomorphism onto N(" + std::to_string(s) +
                    "): " + graded.certificate;
  return out;
}

}  // namespace sdw
