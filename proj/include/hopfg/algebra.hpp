#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hopfg/cyclotomic.hpp"
#include "hopfg/labels.hpp"

namespace hopfg {

/// One graded piece H_ᾱ^β̄, identified by representatives (lower, upper).
struct PieceRef {
  Label lower;
  Label upper;
  friend bool operator==(const PieceRef& a, const PieceRef& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

/// Element of a graded piece as a sparse coefficient vector.
///
/// Internal coordinates are the K-power basis E^ℓ F^(m) K^{b+β} with
/// idx = (ℓ·r' + m)·r' + b; the integral (T-) basis view is obtained through
/// the exact per-piece discrete Fourier transform (see UqSl2).
struct AlgElem {
  PieceRef piece;
  std::vector<std::pair<int, Cyc>> co;  // sorted by index, no zero entries

  bool is_zero() const {
    for (auto& [i, c] : co)
      if (!c.is_zero()) return false;
    return true;
  }
  void add_term(int idx, const Cyc& c) { co.emplace_back(idx, c); }
  void normalize();  // sort, merge, drop exact zeros
};

/// Sparse element of a two-fold tensor product of pieces.
struct TensorElem {
  PieceRef p1, p2;
  std::vector<std::pair<std::pair<int, int>, Cyc>> co;
  void add_term(int i, int j, const Cyc& c) { co.push_back({{i, j}, c}); }
  void normalize();
};

/// R-matrix value: finite sum of pure tensors in H_ᾱ^{β/2} ⊗ H_β̄^{α/2}.
struct RTensor {
  PieceRef p1, p2;
  std::vector<std::pair<AlgElem, AlgElem>> terms;
};

/// Structure-constant tables used by the exhaustive suites; instantiated per
/// label key and cached (see UqSl2).
struct ProdEnt {
  int idx;
  Cyc c;
};
struct ProductTable {
  int dim;                                  // rows indexed i1*dim + i2
  std::vector<std::vector<ProdEnt>> rows;
};
struct CoprodEnt {
  int idx1, idx2;
  Cyc c;
};
struct CoprodTable {
  std::vector<std::vector<CoprodEnt>> rows;  // one per basis index
};
struct LinTable {
  std::vector<std::vector<ProdEnt>> rows;
};

/// Abstract ribbon/factorizable Hopf G-bialgebra instance ("StructureMaps"):
/// every map evaluable on elements for arbitrary sampled labels, plus table
/// access for the exhaustive axiom suites.
class HopfGAlgebra {
 public:
  virtual ~HopfGAlgebra() = default;

  virtual const Field& field() const = 0;
  virtual int rprime() const = 0;
  int dim() const {
    int rp = rprime();
    return rp * rp * rp;
  }

  virtual AlgElem product(const AlgElem& x, const AlgElem& y) const = 0;
  virtual AlgElem unit(const Label& alpha) const = 0;
  virtual TensorElem coproduct(const AlgElem& x, const Label& a1,
                               const Label& a2) const = 0;
  virtual Cyc counit(const AlgElem& x) const = 0;
  virtual AlgElem antipode(const AlgElem& x) const = 0;
  virtual AlgElem antipode_inv(const AlgElem& x) const = 0;

  virtual RTensor r_matrix(const Label& a, const Label& b) const = 0;
  virtual AlgElem ribbon(const Label& a) const = 0;
  virtual AlgElem ribbon_inv(const Label& a) const = 0;
  virtual AlgElem drinfeld_u(const Label& a) const = 0;
  virtual AlgElem drinfeld_u_inv(const Label& a) const = 0;
  virtual AlgElem pivotal(const Label& a) const = 0;
  virtual AlgElem pivotal_inv(const Label& a) const = 0;

  virtual Cyc integral(const AlgElem& x) const = 0;  // λ_α on H_ᾱ^0
  virtual AlgElem cointegral(const Label& a) const = 0;

  /// μ on basis pairs of (lower, upL) ⊗ (lower, upR).
  virtual const ProductTable& product_table(const Label& lower, const Label& upL,
                                            const Label& upR) const = 0;
  /// Δ with lower splitting (a1, a2); upper-independent coefficients.
  virtual const CoprodTable& coproduct_table(const Label& a1,
                                             const Label& a2) const = 0;
  /// S on basis of (lower, upper); target piece (-lower, -upper).
  virtual const LinTable& antipode_table(const Label& lower) const = 0;

  /// Upper-representative rebase: same element, upper rep shifted by an even
  /// integer (coefficients pick up wrap factors).
  virtual AlgElem rebase_upper(const AlgElem& x, const Label& new_upper) const = 0;

  /// Adjoint action x ▷ y = x_(1,α) y S(x_(2,-α)) of x ∈ H_0^γ on y ∈ H_ᾱ^β̄.
  AlgElem adjoint_act(const AlgElem& x, const AlgElem& y) const;

  /// Drinfeld map D_{α,β}: f ↦ f((R''_i)(R'_j)) (R'_i)(R''_j) ∈ H_β^α for a
  /// functional f on H_α^β given extensionally.
  AlgElem drinfeld_map(const Label& alpha, const Label& beta,
                       const std::function<Cyc(const AlgElem&)>& f) const;

  /// Equality as elements of the graded family: lower classes match and the
  /// coordinates agree after rebasing to a common upper representative
  /// (pieces with integer-shifted upper labels coincide).
  bool elems_equal(const AlgElem& x, const AlgElem& y) const;
};

}  // namespace hopfg
