#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sdw/ring.hpp"

namespace sdw {

/// Finitely generated graded module over R = P/I: the free P-module on
/// generators of the given degrees modulo the relation columns and I times
/// the free module.  The Gröbner basis of the relation module is computed on
/// first use and shared between copies.
class PresentedModule {
 public:
  PresentedModule() = default;
  /// Throws std::invalid_argument on inhomogeneous relations.
  PresentedModule(QRingPtr ring, std::vector<int> degrees, std::vector<FreeElement> relations);
  /// Rows are generators, columns are relations.
  static PresentedModule from_matrix(QRingPtr ring, std::vector<int> degrees,
                                     const std::vector<std::vector<Polynomial>>& rows);
  static PresentedModule free(QRingPtr ring, std::vector<int> degrees);
  static PresentedModule ring_module(QRingPtr ring) { return free(std::move(ring), {0}); }
  static PresentedModule residue_field(QRingPtr ring);
  static PresentedModule zero(QRingPtr ring) { return free(std::move(ring), {}); }

  const QRingPtr& ring() const { return d_->ring; }
  const FreeModule& free_module() const { return d_->F; }
  int rank() const { return d_->F.rank(); }
  const std::vector<int>& degrees() const { return d_->F.degrees(); }
  const std::vector<FreeElement>& relations() const { return d_->relations; }
  /// Relation matrix as polynomials: entry [gen][column].
  std::vector<std::vector<Polynomial>> matrix() const;

  /// Gröbner basis of relations + I*F.
  const GroebnerBasis& gb() const;
  FreeElement normal_form(const FreeElement& v) const { return gb().normal_form(v); }
  bool is_zero(const FreeElement& v) const { return normal_form(v).empty(); }

  bool is_zero() const;
  /// Relations lie in I*F, so the module is free over R.
  bool is_free() const;
  /// Known to be minimally presented (set by minimal_presentation).
  bool is_minimal() const { return d_->minimal; }

  HilbertSeries hilbert_series() const { return sdw::hilbert_series(gb()); }
  std::vector<long long> hilbert_function(int lo, int hi) const { return hilbert_series().values(lo, hi); }
  /// Krull dimension, -1 for the zero module.
  int dim() const { return module_dimension(gb()); }

  /// M(s): the generator of degree d moves to degree d - s.
  PresentedModule twist(int s) const;
  std::string to_string() const;

 private:
  friend struct ModuleAccess;
  struct Data {
    QRingPtr ring;
    FreeModule F;
    std::vector<FreeElement> relations;
    bool minimal = false;
    std::once_flag once;
    std::shared_ptr<const GroebnerBasis> gb;
  };
  std::shared_ptr<Data> d_;
};

PresentedModule direct_sum(const std::vector<PresentedModule>& parts);

/// Homogeneous map of the given degree between presented modules: the image of
/// source generator i is images[i], an element of the target's free module of
/// degree deg(e_i) + degree.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(PresentedModule source, PresentedModule target, std::vector<FreeElement> images,
            int degree = 0);
  static ModuleMap identity(const PresentedModule& M);
  static ModuleMap zero(const PresentedModule& M, const PresentedModule& N, int degree = 0);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const std::vector<FreeElement>& images() const { return images_; }
  int degree() const { return degree_; }

  /// Image of an element of the source's free module (not reduced).
  FreeElement apply(const FreeElement& v) const;
  /// Homogeneity and relations of the source mapping into the target relations.
  bool is_well_defined() const;
  bool is_zero() const;
  std::string to_string() const;

 private:
  PresentedModule source_, target_;
  std::vector<FreeElement> images_;
  int degree_ = 0;
};

/// g o f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct ModuleWithMap {
  PresentedModule module;
  ModuleMap map;
};

/// Minimal presentation of (A + B)/B inside F, where B is given by a Gröbner
/// basis of B + I*F.
struct Subquotient {
  PresentedModule module;
  /// Images of the module's generators in F.
  std::vector<FreeElement> generators;
  /// Coordinates (in the module's free module) of an element of A + B, or
  /// nullopt when it is outside A + B.
  std::optional<FreeElement> lift(const FreeElement& v) const;

  std::shared_ptr<const GroebnerBasis> lifter;
  /// Row i: generator i of A in terms of the minimal generators.
  std::vector<FreeElement> projection;
};

Subquotient subquotient(const QRingPtr& ring, const FreeModule& F, const std::vector<FreeElement>& A,
                        const GroebnerBasis& B);

/// Inclusion of the kernel into the source.
ModuleWithMap kernel(const ModuleMap& f);
/// Inclusion of the image into the target.
ModuleWithMap image(const ModuleMap& f);
/// Projection of the target onto the (minimally presented) cokernel.
ModuleWithMap cokernel(const ModuleMap& f);

struct MinimalPresentation {
  PresentedModule module;
  ModuleMap to_original;    // module -> M
  ModuleMap from_original;  // M -> module
};
MinimalPresentation minimal_presentation(const PresentedModule& M);
/// Minimal number of generators.
int mu(const PresentedModule& M);

/// Hom_R(M, N) presented as the kernel of N^{g0} -> N^{g1} built from a minimal
/// presentation of M.  Each generator comes with the homomorphism it stands for.
class HomModule {
 public:
  HomModule(const PresentedModule& M, const PresentedModule& N);

  const PresentedModule& module() const { return sub_.module; }
  const PresentedModule& source() const { return M_; }
  const PresentedModule& target() const { return N_; }
  /// Homomorphism M -> N represented by generator l (degree = generator degree).
  const ModuleMap& dictionary(std::size_t l) const { return dictionary_[l]; }
  std::size_t size() const { return dictionary_.size(); }
  /// Coordinates of a homomorphism M -> N in the generators; nullopt if the
  /// map is not well defined.
  std::optional<FreeElement> lift(const ModuleMap& h) const;
  /// The homomorphism with the given coordinates.
  ModuleMap evaluate(const FreeElement& coords) const;

 private:
  FreeElement pack(const std::vector<FreeElement>& images_on_minimal) const;
  PresentedModule M_, N_;
  MinimalPresentation Mmin_;
  FreeModule H0_;
  Subquotient sub_;
  std::vector<ModuleMap> dictionary_;
};

/// Hom(t, N): Hom(M2, N) -> Hom(M1, N) for t: M1 -> M2.
ModuleMap hom_source_map(const ModuleMap& t, const HomModule& H2, const HomModule& H1);
/// Hom(M, t): Hom(M, N1) -> Hom(M, N2) for t: N1 -> N2.
ModuleMap hom_target_map(const ModuleMap& t, const HomModule& H1, const HomModule& H2);

/// Ideal of P generated by the (g - j)-minors of the minimal relation matrix
/// and the ideal of the ring.
std::vector<Polynomial> fitting_ideal(const PresentedModule& M, int j);

enum class Tri { True, False, Unknown };

struct IsoResult {
  Tri verdict = Tri::Unknown;
  std::string certificate;
  std::optional<ModuleMap> witness;
};
IsoResult is_isomorphic(const PresentedModule& M, const PresentedModule& N, int trials = 20,
                        std::uint64_t seed = 1);

/// Finite direct sum of twists of a base module: C(t_1) + ... + C(t_m).
struct CPower {
  PresentedModule base;
  std::vector<int> twists;
  PresentedModule module() const;
};

/// Elements of F with every term of the given total degree: monomial basis of
/// (P/I)_d placed in component comp (normal forms modulo the ring ideal).
std::vector<Monomial> standard_monomials(const QuotientRing& R, int degree);

}  // namespace sdw
