#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdw/linalg.hpp"
#include "sdw/semidual.hpp"

// Brute-force engine for finite-length graded modules.  Everything here uses
// monomial enumeration and dense row reduction only, never a Gröbner basis, so
// it can referee the main pipeline.
namespace sdw::oracle {

using Vec = std::vector<PrimeField::Elem>;
/// Graded dimensions, zero entries omitted.
using Dims = std::map<int, long long>;

struct FiniteModule {
  PrimeField field;
  std::vector<int> weights;
  /// Degree of each basis element.
  std::vector<int> degree;
  /// One matrix per variable; column b is x_k times basis element b.
  std::vector<DenseMatrix> action;

  int dim() const { return static_cast<int>(degree.size()); }
  Dims dims() const;
  Vec act(int var, const Vec& v) const;
  /// x_i x_j = x_j x_i as operators.
  bool actions_commute() const;
};

struct FiniteAlgebra {
  RingPtr ring;
  /// R as a module over itself; basis element 0 is the identity.
  FiniteModule regular;
  /// Monomial standing for each basis element.
  std::vector<Monomial> basis;
  /// table[i][j] = basis_i * basis_j in basis coordinates.
  std::vector<std::vector<Vec>> table;

  int dim() const { return regular.dim(); }
  bool is_associative() const;
  bool is_unital() const;
  /// Every generator of the defining ideal acts as zero on the regular module.
  bool kills_ideal(const std::vector<Polynomial>& ideal) const;
};

/// Throws std::invalid_argument when M does not vanish in high degrees.
FiniteModule to_finite(const PresentedModule& M);
FiniteAlgebra finite_algebra(const QRingPtr& R);

/// Operator of a polynomial on a finite module.
DenseMatrix evaluate(const FiniteModule& M, const Polynomial& f);

/// Homogeneous homomorphisms M -> N of each degree, as dim N x dim M matrices.
std::map<int, std::vector<DenseMatrix>> hom_basis(const FiniteModule& M, const FiniteModule& N);
Dims hom_dims(const FiniteModule& M, const FiniteModule& N);

/// Minimal graded free resolution of a finite module over a finite algebra.
class Resolution {
 public:
  Resolution(const FiniteAlgebra& A, const FiniteModule& M, int length);

  int length() const { return static_cast<int>(gens_.size()) - 1; }
  /// Degrees of the generators of F_i.
  const std::vector<int>& generators(int i) const { return gens_[i]; }
  /// Image of generator j of F_{i+1} in F_i, coordinates (a, j') -> j' * dim A + a.
  const std::vector<Vec>& differential(int i) const { return diffs_[i]; }
  /// Matrix of Hom(F_i, N) -> Hom(F_{i+1}, N) on (generator, basis of N) coordinates.
  DenseMatrix dual_matrix(int i, const FiniteModule& N) const;
  const FiniteAlgebra& algebra() const { return *A_; }

 private:
  const FiniteAlgebra* A_;
  std::vector<std::vector<int>> gens_;
  std::vector<std::vector<Vec>> diffs_;
};

/// dim_k Ext^i(M, N) per degree.
Dims ext_dims(const Resolution& res, int i, const FiniteModule& N);

/// Tr_C M = coker(Hom(F_0, C) -> Hom(F_1, C)).
FiniteModule transpose(const Resolution& res, const FiniteModule& C);

/// Dimension of ker(M -> M^dagger dagger): the common kernel of all maps M -> C.
int lambda_kernel_dim(const FiniteModule& M, const FiniteModule& C);

Dims oracle_hom(const PresentedModule& M, const PresentedModule& N);
Dims oracle_ext(int i, const PresentedModule& M, const PresentedModule& N);

struct Instance {
  std::string name;
  QRingPtr ring;
  std::vector<NamedModule> modules;
};

/// Pipeline Hom/Ext dimensions against the oracle for every ordered pair of
/// modules and 0 <= i <= i_max; lambda-injectivity and 1-, 2-torsionfreeness
/// against R for every module.
CheckReport differential_test(const std::vector<Instance>& instances, int i_max);

std::string dims_string(const Dims& d);

}  // namespace sdw::oracle
