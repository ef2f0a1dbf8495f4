#include "sdw/serre.hpp"

#include <stdexcept>

namespace sdw {

PresentedModule over_ambient(const PresentedModule& M) {
  const auto& R = M.ring();
  auto P = QuotientRing::polynomial(R->poly_ring());
  std::vector<FreeElement> rels = M.relations();
  const auto& F = M.free_module();
  for (const auto& g : R->generators())
    for (int i = 0; i < M.rank(); ++i) rels.push_back(F.basis_times(i, g));
  return PresentedModule(P, M.degrees(), std::move(rels));
}

int krull_dim(const PresentedModule& M) { return M.dim(); }

int projective_dimension_ambient(const PresentedModule& M) {
  auto MP = over_ambient(M);
  auto res = free_resolution(MP, MP.ring()->num_vars() + 1);
  if (!res.finite) throw std::logic_error("resolution over the polynomial ring did not terminate");
  if (res.complex.terms.front().rank() == 0) return -1;
  return res.complex.length();
}

int depth_graded(const PresentedModule& M) {
  int pd = projective_dimension_ambient(M);
  if (pd < 0) throw std::invalid_argument("depth of the zero module");
  return M.ring()->num_vars() - pd;
}

int depth_by_ext(const PresentedModule& M) {
  auto MP = over_ambient(M);
  if (MP.is_zero()) throw std::invalid_argument("depth of the zero module");
  const int n = MP.ring()->num_vars();
  ExtComputer ext(PresentedModule::residue_field(MP.ring()), MP, n);
  for (int i = 0; i <= n; ++i)
    if (!ext.vanishes(i)) return i;
  throw std::logic_error("Ext(k, M) vanishes up to the number of variables");
}

bool is_CM(const PresentedModule& M) {
  if (M.is_zero()) return false;
  return depth_graded(M) == krull_dim(M);
}

RingInvariants ring_invariants(const QRingPtr& R) {
  RingInvariants inv;
  inv.dim = R->dim();
  inv.codim = R->codim();
  auto& cache = R->cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (!cache.depth) cache.depth = depth_graded(PresentedModule::ring_module(R));
    inv.depth = *cache.depth;
  }
  inv.is_CM = inv.depth == inv.dim;
  inv.d_sup_depth = inv.depth;
  return inv;
}

bool is_gorenstein(const QRingPtr& R, const PresentedModule& omega) {
  return ring_invariants(R).is_CM && mu(omega) == 1;
}

int ideal_codim(const RingPtr& P, const std::vector<Polynomial>& gens) {
  auto gb = ideal_groebner(P, gens);
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lead().mono);
  int d = monomial_dimension(*P, leads);
  if (d < 0) return kInfiniteCodim;
  return P->num_vars() - d;
}

SerreResult satisfies_Sn(const PresentedModule& M, int n, bool assume_equidimensional) {
  SerreResult out;
  const auto& R = M.ring();
  if (!assume_equidimensional && !ring_invariants(R).is_CM) {
    out.verdict = Verdict::Unknown;
    out.detail = "ring not verified Cohen-Macaulay and equidimensionality not asserted";
    return out;
  }
  if (M.is_zero()) {
    out.verdict = Verdict::True;
    out.detail = "zero module";
    return out;
  }
  const int N = R->num_vars();
  const int c = R->codim();
  auto MP = over_ambient(M);
  ExtComputer E(MP, PresentedModule::ring_module(MP.ring()), N);
  for (int j = c + 1; j <= N; ++j) {
    int dim = E.series(j).dimension();
    if (dim < 0) continue;
    int codim = N - dim;
    if (codim < j + n) {
      out.verdict = Verdict::False;
      out.witness_j = j;
      out.witness_codim = codim;
      out.detail = "codim Ext^" + std::to_string(j) + "_P(M,P) = " + std::to_string(codim) + " < " +
                   std::to_string(j + n);
      return out;
    }
  }
  out.verdict = Verdict::True;
  return out;
}

SerreResult satisfies_Sn_tilde(const PresentedModule& M, int n) {
  if (!ring_invariants(M.ring()).is_CM) {
    SerreResult out;
    out.verdict = Verdict::Unsupported;
    out.detail = "only decided over Cohen-Macaulay rings";
    return out;
  }
  return satisfies_Sn(M, n);
}

std::vector<Polynomial> trace_ideal(const PresentedModule& D) {
  const auto& R = D.ring();
  HomModule H(D, PresentedModule::ring_module(R));
  std::vector<Polynomial> gens = R->generators();
  FreeModule F(R->poly_ring(), {0});
  for (std::size_t l = 0; l < H.size(); ++l)
    for (const auto& v : H.dictionary(l).images()) {
      auto p = R->reduce(F.component(v, 0));
      if (!p.is_zero()) gens.push_back(p);
    }
  return ideal_groebner(R->poly_ring(), gens);
}

GConditionResult check_G_condition(const QRingPtr& R, const PresentedModule& C, int n,
                                   const PresentedModule& omega) {
  GConditionResult out;
  auto inv = ring_invariants(R);
  if (!inv.is_CM) {
    out.verdict = Verdict::Unknown;
    out.detail = "ring not verified Cohen-Macaulay";
    return out;
  }
  auto D = HomModule(C, omega).module();
  out.locus_ideal = trace_ideal(D);
  int codimP = ideal_codim(R->poly_ring(), out.locus_ideal);
  out.locus_codim = codimP >= kInfiniteCodim ? kInfiniteCodim : codimP - inv.codim;
  out.verdict = from_bool(out.locus_codim > n);
  out.detail = out.locus_codim >= kInfiniteCodim
                   ? "C is a canonical module at every prime"
                   : "C fails to be canonical on a locus of codimension " + std::to_string(out.locus_codim);
  return out;
}

bool is_locally_gorenstein_at(const QRingPtr& R, const std::vector<Polynomial>& p,
                              const PresentedModule& omega) {
  std::vector<Polynomial> pg = p;
  pg.insert(pg.end(), R->generators().begin(), R->generators().end());
  auto pgb = ideal_groebner(R->poly_ring(), pg);
  for (const auto& f : fitting_ideal(omega, 1))
    if (!reduce_polynomial(f, pgb).is_zero()) return true;
  return false;
}

}  // namespace sdw
