#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sdw/module.hpp"

namespace sdw {

/// F_0 <- F_1 <- ... <- F_n with free terms; maps[i] : F_{i+1} -> F_i.
struct Complex {
  std::vector<PresentedModule> terms;
  std::vector<ModuleMap> maps;

  int length() const { return static_cast<int>(maps.size()); }
  /// Every composite of consecutive differentials is zero.
  bool d_squared_zero() const;
  /// ker(maps[i-1]) == im(maps[i]) at the term F_i, 1 <= i < terms.size() - 1.
  bool is_exact_at(int i) const;
};

struct Resolution {
  Complex complex;
  /// F_0 -> M, surjective.
  ModuleMap augmentation;
  /// The last computed syzygy module is zero (the resolution is complete).
  bool finite = false;
};

/// Free resolution of M over its ring computed up to homological degree
/// `length`.  With `minimal`, all differentials have entries in the maximal
/// ideal; otherwise the unminimized Schreyer-type syzygies are used.
Resolution free_resolution(const PresentedModule& M, int length, bool minimal = true);

/// Ext^i(M, N) for a fixed pair and a range of i, sharing one resolution of M.
class ExtComputer {
 public:
  ExtComputer(const PresentedModule& M, const PresentedModule& N, int max_index,
              bool minimal = true);

  int max_index() const { return max_index_; }
  /// Minimal presentation of Ext^i(M, N).
  PresentedModule module(int i);
  /// Hilbert series of Ext^i(M, N), without building a presentation.
  HilbertSeries series(int i);
  bool vanishes(int i) { return series(i).numerator.is_zero(); }
  const Resolution& resolution() const { return res_; }

 private:
  // Hom(F_i, N) as a free module over P (blocks indexed by basis of F_i).
  struct HomTerm {
    FreeModule H;
    std::shared_ptr<GroebnerBasis> block;  // N's relations in every block
    HilbertSeries free_series;             // Hilbert series of H / block
  };
  HomTerm& term(int i);
  // images of the basis of Hom(F_i, N) in Hom(F_{i+1}, N)
  const std::vector<FreeElement>& dual_images(int i);
  // Gröbner basis of im(dual_{i}) + block inside Hom(F_{i+1}, N)
  const GroebnerBasis& image_basis(int i);

  PresentedModule N_;
  int max_index_;
  Resolution res_;
  std::map<int, HomTerm> terms_;
  std::map<int, std::vector<FreeElement>> images_;
  std::map<int, GroebnerBasis> image_gb_;
};

PresentedModule ext_module(int i, const PresentedModule& M, const PresentedModule& N);

/// M^dagger = Hom(M, C).
PresentedModule c_dual(const PresentedModule& M, const PresentedModule& C);

/// R -> Hom(C, C), 1 |-> identity.
struct Homothety {
  ModuleMap map;
  std::shared_ptr<HomModule> endomorphisms;
};
Homothety homothety_map(const PresentedModule& C);

/// lambda_M : M -> M^{dagger dagger}.
struct LambdaMap {
  ModuleMap map;
  std::shared_ptr<HomModule> dual;    // M^dagger
  std::shared_ptr<HomModule> bidual;  // M^{dagger dagger}
};
LambdaMap lambda_map(const PresentedModule& M, const PresentedModule& C);

/// Kernel and cokernel both zero.
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

/// Tr_C M from the minimal presentation of M, minimally presented.
PresentedModule transpose_C(const PresentedModule& M, const PresentedModule& C);

/// Omega^i M from the minimal free resolution (Omega^0 M = M).
PresentedModule syzygy_module(const PresentedModule& M, int i);

/// Isomorphism after localizing at the irrelevant ideal.  False is backed by
/// minimal Betti numbers or Fitting ideals, which do not see twists; true by
/// a graded isomorphism M -> N(s).
IsoResult is_isomorphic_local(const PresentedModule& M, const PresentedModule& N, int trials = 20,
                              std::uint64_t seed = 1);

}  // namespace sdw
