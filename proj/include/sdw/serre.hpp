#pragma once

#include <climits>
#include <string>
#include <vector>

#include "sdw/homology.hpp"
#include "sdw/verdict.hpp"

namespace sdw {

/// Codimension reported for the unit ideal (empty support).
constexpr int kInfiniteCodim = INT_MAX / 2;

struct RingInvariants {
  int dim = 0;
  int depth = 0;
  int codim = 0;  // dim P - dim R
  bool is_CM = false;
  /// sup of local depths; for graded rings the depth at the irrelevant ideal.
  int d_sup_depth = 0;
};

RingInvariants ring_invariants(const QRingPtr& R);

/// M regarded as a module over the ambient polynomial ring.
PresentedModule over_ambient(const PresentedModule& M);

/// Krull dimension (-1 for the zero module).
int krull_dim(const PresentedModule& M);
/// Length of the minimal free resolution of M over the ambient polynomial ring.
int projective_dimension_ambient(const PresentedModule& M);
/// depth at the irrelevant ideal via Auslander-Buchsbaum over the ambient
/// ring; throws std::invalid_argument for the zero module.
int depth_graded(const PresentedModule& M);
/// depth computed as the least i with Ext^i_P(k, M) != 0 over the ambient
/// ring; independent of the projective dimension.
int depth_by_ext(const PresentedModule& M);
bool is_CM(const PresentedModule& M);
/// CM and the canonical module is cyclic.
bool is_gorenstein(const QRingPtr& R, const PresentedModule& omega);

/// Codimension in P of the ideal generated by gens (kInfiniteCodim for the unit ideal).
int ideal_codim(const RingPtr& P, const std::vector<Polynomial>& gens);

struct SerreResult {
  Verdict verdict = Verdict::Unknown;
  /// On false: the Ext index j with codim Ext^j_P(M, P) < j + n.
  int witness_j = -1;
  int witness_codim = -1;
  std::string detail;
};

/// (S_n) for M through the codimensions of Ext^j_P(M, P), j > codim R.
/// Needs R Cohen-Macaulay (or equidimensionality asserted), else unknown.
SerreResult satisfies_Sn(const PresentedModule& M, int n, bool assume_equidimensional = false);
/// Over a Cohen-Macaulay ring the same as satisfies_Sn; unsupported otherwise.
SerreResult satisfies_Sn_tilde(const PresentedModule& M, int n);

/// Gröbner basis (in P) of the trace ideal of D plus the ring ideal: the
/// ideal generated by f(d) for f in Hom(D, R), d in D.
std::vector<Polynomial> trace_ideal(const PresentedModule& D);

struct GConditionResult {
  Verdict verdict = Verdict::Unknown;
  /// Codimension in R of the locus where C is not a canonical module.
  int locus_codim = -1;
  std::vector<Polynomial> locus_ideal;
  std::string detail;
};

/// (G_n^C) for a semidualizing C over a Cohen-Macaulay ring with canonical
/// module omega: C_p is canonical exactly off V(trace Hom(C, omega)).
GConditionResult check_G_condition(const QRingPtr& R, const PresentedModule& C, int n,
                                   const PresentedModule& omega);

/// R_p Gorenstein, i.e. Fitt_1(omega) is not contained in p (p given by
/// generators in P; primality is the caller's responsibility).
bool is_locally_gorenstein_at(const QRingPtr& R, const std::vector<Polynomial>& p,
                              const PresentedModule& omega);

}  // namespace sdw
