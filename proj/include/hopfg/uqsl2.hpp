#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "hopfg/algebra.hpp"

namespace hopfg {

/// The factorizable ribbon Hopf G-bialgebra from quantum sl2 at an odd
/// primitive r-th root of unity, G = ℚ/2ℤ, in the integral basis
/// E^ℓ F^(m) T_{2n+α}^β (presentation) over K-power coordinates
/// E^ℓ F^(m) K^{b+β} (computation).
///
/// Defining relations: E^{r'} = F^{r'} = 0, K E K^{-1} = q² E,
/// K F K^{-1} = q^{-2} F, [E,F] = (K - K^{-1})/(q - q^{-1}), and on the
/// piece with lower label ᾱ the Cartan reduction K^{r'} = q^{r'α}.
class UqSl2 final : public HopfGAlgebra {
 public:
  /// Rejects even r.  Piece dimension is r'³.
  UqSl2(int r, int D, bool shift_reps_by_two = false);

  const Field& field() const override { return field_; }
  int rprime() const override { return rp_; }

  int kindex(int e, int f, int b) const { return (e * rp_ + f) * rp_ + b; }

  /// Representative used when a formula needs an explicit representative of
  /// a label class (identity unless the instance was built rep-shifted).
  Label rep(const Label& a) const;

  AlgElem product(const AlgElem& x, const AlgElem& y) const override;
  AlgElem unit(const Label& alpha) const override;
  TensorElem coproduct(const AlgElem& x, const Label& a1,
                       const Label& a2) const override;
  Cyc counit(const AlgElem& x) const override;
  AlgElem antipode(const AlgElem& x) const override;
  AlgElem antipode_inv(const AlgElem& x) const override;

  RTensor r_matrix(const Label& a, const Label& b) const override;
  AlgElem ribbon(const Label& a) const override;
  AlgElem ribbon_inv(const Label& a) const override;
  AlgElem drinfeld_u(const Label& a) const override;
  AlgElem drinfeld_u_inv(const Label& a) const override;
  AlgElem pivotal(const Label& a) const override;
  AlgElem pivotal_inv(const Label& a) const override;

  Cyc integral(const AlgElem& x) const override;
  AlgElem cointegral(const Label& a) const override;

  const ProductTable& product_table(const Label& lower, const Label& upL,
                                    const Label& upR) const override;
  const CoprodTable& coproduct_table(const Label& a1,
                                     const Label& a2) const override;
  const LinTable& antipode_table(const Label& lower) const override;

  AlgElem rebase_upper(const AlgElem& x, const Label& new_upper) const override;

  /// Alternative R-matrix presentations (verified equal in tests).
  RTensor r_matrix_Kform(const Label& a, const Label& b) const;
  RTensor r_matrix_Tright(const Label& a, const Label& b) const;

  /// T_λ^{βarg} interpreted in the given piece: q^{λk}·(DFT expansion of
  /// T_λ^{β_piece}), k = βarg - β_piece ∈ ℤ.  Collapses to a single basis
  /// element (or an honest dense combination) exactly as the algebra does.
  AlgElem normalize_T(const Rat& lambda, const Rat& beta_arg,
                      const PieceRef& piece) const;

  /// Basis monomial E^e F^(f) T_{2n+γ}^β of the given piece.
  AlgElem t_basis_elem(const PieceRef& piece, int e, int f, int n) const;
  /// Basis monomial E^e F^(f) K^{b+β}.
  AlgElem k_basis_elem(const PieceRef& piece, int e, int f, int b) const;

  /// Coefficients of x over the integral basis (index (e·r'+f)·r'+n).
  std::vector<std::pair<int, Cyc>> to_integral_basis(const AlgElem& x) const;
  AlgElem from_integral_basis(const PieceRef& piece,
                              const std::vector<std::pair<int, Cyc>>& co) const;

  void clear_caches() const;

 private:
  struct FreeMono {
    int e, f;
    Rat s;  // exact K-exponent
    Cyc c;
  };
  using FreeElem = std::vector<FreeMono>;

  FreeElem mono_mul(const FreeMono& x, const FreeMono& y) const;
  AlgElem project(const FreeElem& w, const PieceRef& piece) const;
  FreeMono mono_of(const AlgElem& x, size_t term) const;

  AlgElem solve_mul_inverse(const AlgElem& v, const Label& inv_upper) const;

  Field field_;
  int rp_;
  bool shift_;

  using Key3 = std::tuple<Rat, Rat, Rat>;
  using Key2 = std::tuple<Rat, Rat>;
  mutable std::map<Key3, ProductTable> prod_cache_;
  mutable std::map<Key2, CoprodTable> coprod_cache_;
  mutable std::map<Rat, LinTable> antipode_cache_;
  mutable std::map<Rat, LinTable> antipode_inv_cache_;
  mutable std::map<Rat, AlgElem> ribbon_cache_, ribbon_inv_cache_, u_cache_,
      u_inv_cache_;
};

}  // namespace hopfg
