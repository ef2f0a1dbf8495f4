#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdw/polynomial.hpp"

namespace sdw {

struct VTerm {
  Monomial mono;
  std::uint32_t comp;
  PrimeField::Elem coeff;
};

/// Element of a graded free module P^r: terms strictly descending in the
/// ambient FreeModule's order, no zero coefficients.
using FreeElement = std::vector<VTerm>;

enum class ModuleOrderKind { PositionOverTerm, TermOverPosition, Schreyer };

/// Graded free module over a polynomial ring together with a module monomial
/// order.  Generator i lives in degree degrees[i].
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> degrees,
             ModuleOrderKind kind = ModuleOrderKind::TermOverPosition);
  /// Schreyer order induced by the lead terms (shift monomial, base component)
  /// of a list of elements of a TOP-ordered module with degrees base_degrees.
  static FreeModule schreyer(RingPtr ring, std::vector<Monomial> shifts,
                             std::vector<std::uint32_t> base_comps,
                             const std::vector<int>& base_degrees);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  int rank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::uint32_t comp) const { return degrees_[comp]; }
  ModuleOrderKind order() const { return kind_; }

  int term_degree(const VTerm& t) const { return t.mono.degree() + degrees_[t.comp]; }

  /// +1 if a > b in the module order, -1 if a < b, 0 if equal (same comp & monomial).
  int compare(const VTerm& a, const VTerm& b) const {
    switch (kind_) {
      case ModuleOrderKind::PositionOverTerm:
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return PolyRing::compare(a.mono, b.mono);
      case ModuleOrderKind::TermOverPosition: {
        int da = a.mono.degree() + degrees_[a.comp], db = b.mono.degree() + degrees_[b.comp];
        if (da != db) return da > db ? 1 : -1;
        int c = PolyRing::compare(a.mono, b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
      }
      case ModuleOrderKind::Schreyer:
      default:
        return compare_schreyer(a, b);
    }
  }

  /// Sorts, merges duplicates, drops zeros.
  void normalize(FreeElement& v) const;
  /// f + c * m * g.
  FreeElement add_scaled(const FreeElement& f, const FreeElement& g, const Monomial& m,
                         PrimeField::Elem c) const;
  /// c * m * g (order preserved since module orders are multiplicative).
  FreeElement scaled(const FreeElement& g, const Monomial& m, PrimeField::Elem c) const;
  FreeElement add(const FreeElement& f, const FreeElement& g) const;
  FreeElement sub(const FreeElement& f, const FreeElement& g) const;
  FreeElement times(const FreeElement& v, const Polynomial& p) const;
  FreeElement monic(const FreeElement& v) const;

  /// p * e_i.
  FreeElement basis_times(std::uint32_t i, const Polynomial& p) const;
  FreeElement basis(std::uint32_t i) const;
  FreeElement from_components(const std::vector<Polynomial>& comps) const;
  Polynomial component(const FreeElement& v, std::uint32_t i) const;
  std::vector<Polynomial> components(const FreeElement& v) const;
  /// Re-sorts an element written in another module with the same rank into this order.
  FreeElement import(const FreeElement& v) const;

  /// Total degree if homogeneous w.r.t. generator degrees; nullopt for
  /// inhomogeneous input and for zero.
  std::optional<int> homogeneous_degree(const FreeElement& v) const;
  bool is_homogeneous(const FreeElement& v) const {
    return v.empty() || homogeneous_degree(v).has_value();
  }

  std::string to_string(const FreeElement& v) const;

 private:
  int compare_schreyer(const VTerm& a, const VTerm& b) const;

  RingPtr ring_;
  std::vector<int> degrees_;
  ModuleOrderKind kind_ = ModuleOrderKind::TermOverPosition;
  std::vector<Monomial> shifts_;
  std::vector<std::uint32_t> base_comps_;
  std::vector<int> base_degrees_;
};

}  // namespace sdw
