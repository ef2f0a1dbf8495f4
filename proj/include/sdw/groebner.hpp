#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sdw/free_module.hpp"

namespace sdw {

enum class GbElementKind : std::uint8_t { Base, Generated };

struct GbOptions {
  /// Carry each element's expression in terms of the input generators and
  /// collect the syzygies of the generators (modulo the ring ideal and base).
  bool track = false;
  /// Interreduce tails at the end, giving the reduced basis when no base is used.
  bool reduce_tails = true;
  /// Degrees of the generator module when tracking; defaults to the degrees of
  /// the inputs (zero inputs then get degree 0).
  std::vector<int> generator_degrees;
};

/// Gröbner basis of a homogeneous submodule U + I*F of a graded free module F
/// over P, where I is given by its (reduced) Gröbner basis `ring_basis()`.
/// The I*F part is never materialized: every ring element acts on every
/// component during reduction.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  /// Wraps elements that, together with the ring ideal, already form a Gröbner basis.
  static GroebnerBasis assume(FreeModule F, std::vector<Polynomial> ring,
                              std::vector<FreeElement> elements);

  const FreeModule& module() const { return module_; }
  const std::vector<Polynomial>& ring_basis() const { return ring_; }
  std::size_t size() const { return entries_.size(); }
  const FreeElement& element(std::size_t i) const { return entries_[i].v; }
  GbElementKind kind(std::size_t i) const { return entries_[i].kind; }
  std::vector<FreeElement> elements() const;

  bool tracked() const { return tracked_; }
  /// Free module whose basis vectors are the input generators (only when tracked).
  const FreeModule& generator_module() const { return gen_module_; }
  const FreeElement& representation(std::size_t i) const { return entries_[i].rep; }

  /// Fully reduced remainder: no term divisible by a lead term (ring leads included).
  FreeElement normal_form(const FreeElement& v) const;
  bool contains(const FreeElement& v) const { return normal_form(v).empty(); }
  /// Coefficients c with v = sum c_i gen_i modulo base and ring ideal; nullopt
  /// when v is not in the span.  Requires a tracked basis.
  std::optional<FreeElement> lift(const FreeElement& v) const;

  /// Lead monomials per component, ring leads included in every component.
  std::vector<std::vector<Monomial>> lead_monomials() const;

  /// Reduction with optional accumulation of generator coefficients:
  /// on return f_in + (*acc)(gens) == result modulo base and ring.
  FreeElement reduce(FreeElement f, FreeElement* acc) const;

 private:
  friend class GbBuilder;
  struct Entry {
    FreeElement v;
    FreeElement rep;
    GbElementKind kind;
    bool single_component;
  };
  void index(std::size_t i);
  int find_divisor(const VTerm& t, int& ring_index) const;
  FreeElement merge_tail(const FreeElement& f, std::size_t from, const FreeElement& g,
                         const Monomial& q, PrimeField::Elem c) const;

  FreeModule module_;
  FreeModule gen_module_;
  std::vector<Polynomial> ring_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::pair<Monomial, int>>> by_comp_;
  bool tracked_ = false;
};

struct GbResult {
  GroebnerBasis basis;
  /// Per input generator: not in the span of base, ring and earlier generators
  /// (degree by degree), i.e. the flagged generators form a minimal generating set
  /// of (gens + base) / base.
  std::vector<bool> minimal;
  /// Generators of the syzygy module of the inputs modulo base and ring
  /// (only with track = true), reduced modulo the ring ideal.
  std::vector<FreeElement> syzygies;
};

/// Homogeneous Buchberger algorithm with the normal selection strategy and the
/// Gebauer–Möller criteria.  `base` must share F and the ring; its elements are
/// taken as a Gröbner basis already.  Throws std::invalid_argument on
/// inhomogeneous input.
GbResult groebner(const FreeModule& F, const std::vector<Polynomial>& ring,
                  const std::vector<FreeElement>& gens, const GbOptions& options = {},
                  const GroebnerBasis* base = nullptr);

/// Reduced Gröbner basis of a homogeneous ideal of P.
std::vector<Polynomial> ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens);
/// Normal form of a polynomial modulo an ideal Gröbner basis.
Polynomial reduce_polynomial(const Polynomial& f, const std::vector<Polynomial>& gb);

/// Generators of the syzygy module of `columns` (elements of F) over P/I.
/// With `minimize` the result is a minimal generating set.
std::vector<FreeElement> syzygies(const FreeModule& F, const std::vector<Polynomial>& ring,
                                  const std::vector<FreeElement>& columns, bool minimize = true);

/// Every S-pair of the basis (and of basis/ring pairs) reduces to zero.
bool verify_groebner(const GroebnerBasis& G);

// ---------------------------------------------------------------------------
// Monomial-ideal combinatorics.

/// Krull dimension of P/L for the monomial ideal L generated by `gens`
/// (-1 when L is the unit ideal).
int monomial_dimension(const PolyRing& ring, const std::vector<Monomial>& gens);

/// Minimal generators of a monomial ideal.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens);

/// Laurent polynomial in t with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long coeff = 1);
  const std::map<int, long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int s) const;
  long long at(int e) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  void add(int e, long long v);
  std::map<int, long long> c_;
};

/// Hilbert series of a graded module written as numerator / prod_i (1 - t^{w_i}).
struct HilbertSeries {
  LaurentPoly numerator;
  std::vector<int> weights;
  bool operator==(const HilbertSeries& o) const {
    return numerator == o.numerator && weights == o.weights;
  }
  /// dim_k of the graded pieces lo..hi.
  std::vector<long long> values(int lo, int hi) const;
  /// Krull dimension: order of the pole at t = 1 (-1 for the zero series).
  int dimension() const;
};

/// Numerator K(t) of the Hilbert series of P/L.
LaurentPoly hilbert_numerator(const PolyRing& ring, std::vector<Monomial> gens);

/// Hilbert series of F / (U + I F) from a Gröbner basis of that submodule.
HilbertSeries hilbert_series(const GroebnerBasis& G);
/// Krull dimension of F / (U + I F) (-1 for the zero module).
int module_dimension(const GroebnerBasis& G);

}  // namespace sdw
