#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdw/report.hpp"
#include "sdw/serre.hpp"

namespace sdw {

/// The same generators and relations read over R; throws std::invalid_argument
/// unless the ideal of R annihilates M.  M may live over the ambient
/// polynomial ring of R or over any quotient of it contained in R's ideal.
PresentedModule restrict_to_quotient(const PresentedModule& M, const QRingPtr& R);

/// R (or any quotient of the same ambient ring) as a cyclic module over S.
PresentedModule quotient_as_module(const QRingPtr& R, const QRingPtr& S);

/// Ext^c_P(R, P)(-sum of weights), c = codim R.  Throws std::invalid_argument
/// when R is not Cohen-Macaulay.
PresentedModule canonical_module(const QRingPtr& R);

/// Ext^{dim S - dim R}_S(R, S) as an R-module.  Throws std::invalid_argument
/// when R is not a quotient of S.
PresentedModule jls_C(const QRingPtr& R, const QRingPtr& S);

struct SemidualizingCertificate {
  PresentedModule module;
  bool homothety_iso = false;
  int bound = 0;
  /// Hilbert series of Ext^i(C, C) for i = 1 .. (last index examined).
  std::vector<HilbertSeries> ext_series;
  /// Verified up to bound, or false.
  Verdict verdict = Verdict::Unknown;
  std::string witness;

  bool certified() const { return verdict == Verdict::VerifiedUpToBound; }
};
SemidualizingCertificate is_semidualizing(const PresentedModule& C, int B);

struct TorsionfreeVerdict {
  PresentedModule module;
  int level = 0;
  PresentedModule transpose;
  /// Hilbert series of Ext^i(Tr_C M, C), i = 1..level.
  std::vector<HilbertSeries> ext_series;
  Verdict verdict = Verdict::Unknown;
  /// First i with Ext^i(Tr_C M, C) != 0, or 0.
  int failing_index = 0;
};
TorsionfreeVerdict is_n_C_torsionfree(const PresentedModule& M, const PresentedModule& C, int n);

/// 0 -> M -> P^1 -> ... -> P^n with P^k = C(t_1) + ... + C(t_m), built by
/// mapping each stage into C through a generating set of its C-dual.
struct PushforwardSequence {
  bool success = false;
  /// Stage k (1-based) whose map M_{k-1} -> P^k is not injective.
  int failed_stage = 0;
  /// ker(M_{k-1} -> P^k) at the failed stage.
  std::optional<PresentedModule> obstruction;

  /// M_0 = M, M_k = coker(M_{k-1} -> P^k).
  std::vector<PresentedModule> stages;
  std::vector<CPower> terms;
  /// M_{k-1} -> P^k.
  std::vector<ModuleMap> embeddings;
  /// P^k -> M_k.
  std::vector<ModuleMap> projections;
  /// M -> P^1, P^1 -> P^2, ..., P^{n-1} -> P^n.
  std::vector<ModuleMap> differentials;

  /// Certificates, filled only when requested and the construction succeeded.
  bool certified = false;
  bool chain_exact = false;
  bool dual_exact = false;
  std::string detail;
};
PushforwardSequence universal_pushforward(const PresentedModule& M, const PresentedModule& C, int n,
                                          bool certify = true);

struct SyzygyVerdict {
  /// True (yes), False (no, hypothesis-backed) or Unknown.
  Verdict verdict = Verdict::Unknown;
  std::string route;
  std::string witness;
  HypothesisFlags hypotheses;
  std::optional<PushforwardSequence> pushforward;
};
/// omega is needed for the hypothesis checks; it is computed when absent
/// and the ring is Cohen-Macaulay.
SyzygyVerdict is_n_C_syzygy(const PresentedModule& M, const PresentedModule& C, int n,
                            const std::optional<PresentedModule>& omega = std::nullopt);

struct ReflexivityVerdict {
  /// Verified up to bound, or false.
  Verdict verdict = Verdict::Unknown;
  int bound = 0;
  std::string witness;
};
ReflexivityVerdict is_totally_C_reflexive(const PresentedModule& M, const PresentedModule& C, int B);

struct NamedModule {
  std::string name;
  PresentedModule module;
};

/// Cokernel of a random homogeneous matrix with entries of degree <= 2.
PresentedModule random_coker(const QRingPtr& R, std::uint64_t seed);

/// k, Omega^1 k, Omega^2 k, R, C, omega (when given) and `randoms` seeded
/// random cokernels.
std::vector<NamedModule> standard_modules(const QRingPtr& R, const PresentedModule& C,
                                          const std::optional<PresentedModule>& omega,
                                          std::uint64_t seed, int randoms = 5);

/// Torsionfreeness, pushforward success and (S_n) agree for every module and
/// every 1 <= n <= n_max, once (S_n) and (G_{n-1}^C) are verified for R.
CheckReport theorem_tf_battery(const QRingPtr& R, const PresentedModule& C,
                               const std::vector<NamedModule>& modules, int n_max,
                               const PresentedModule& omega);

/// (G_{n-1}^C) holds exactly when omega is an n-C-syzygy.
CheckReport theorem_lg_check(const QRingPtr& R, const PresentedModule& C, int n,
                             const PresentedModule& omega);

/// n-C-torsionfree and n-C'-torsionfree agree on every module.
CheckReport cross_semidualizing_check(const QRingPtr& R, const PresentedModule& C,
                                      const PresentedModule& C2, const std::vector<NamedModule>& modules,
                                      int n, const PresentedModule& omega);

/// Modules with Ext^{1..B}(M, C) = 0 are totally C-reflexive up to B; and for
/// a generically Gorenstein, non-Gorenstein ring some Ext^i(omega, R), i <= B,
/// is nonzero.  `asserted` must carry the undecidable hypothesis (ES_1^C).
CheckReport ext_vanishing_probe(const QRingPtr& R, const PresentedModule& C,
                                const std::vector<NamedModule>& candidates, int B,
                                const PresentedModule& omega, const HypothesisFlags& asserted);

/// 1-C-torsionfree iff lambda_M is injective; 2-C-torsionfree iff lambda_M is
/// an isomorphism.
CheckReport torsionfree_lambda_check(const PresentedModule& C, const std::vector<NamedModule>& modules);

/// For each successful one-step pushforward 0 -> M -> P -> N -> 0:
/// Ext^i(N^dagger, C) and Ext^{i+1}(M^dagger, C) have equal Hilbert series, 1 <= i <= B-1.
CheckReport pushforward_ext_shift_check(const PresentedModule& C, const std::vector<NamedModule>& modules,
                                        int B);

struct Example {
  int index = 0;
  RingPtr P;
  QRingPtr S, R;
  PresentedModule C, omega, omega_S;
  /// p, q, m as applicable.
  std::map<std::string, std::vector<Polynomial>> primes;
};
/// The trivial-extension family S/(y1, y2)^ell over the three base rings.
Example build_example(int index, int ell = 2);

}  // namespace sdw
