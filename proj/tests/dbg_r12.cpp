#include <cstdio>

#include "hopfg/uqsl2.hpp"

using namespace hopfg;

int main() {
  UqSl2 A(3, 4);
  for (Rat ar : {Rat(0), Rat(1), Rat(1, 2)}) {
    Label a{ar};
    // (R12): u^{-1} = Σ_i R'_i · S^{-... } with R = R_{α,α}:
    // (u^{-1})_α^α = Σ_i (R'_i)_α^{α/2} S_{-α}^{-α/2}(S_α^{α/2}((R''_i)_α^{α/2}))
    RTensor R = A.r_matrix(a, a);
    AlgElem rhs;
    rhs.piece = {a, a};
    for (auto& [r1, r2] : R.terms) {
      AlgElem t = A.product(r1, A.antipode(A.antipode(r2)));
      for (auto& [i, c] : t.co) rhs.add_term(i, c);
    }
    rhs.normalize();
    AlgElem solved = A.drinfeld_u_inv(a);
    bool ok12 = A.elems_equal(A.rebase_upper(rhs, solved.piece.upper), solved);
    printf("alpha=%s  R12 formula == solved u^-1: %s\n", ar.str().c_str(),
           ok12 ? "ok" : "FAIL");
    // R11: (S⊗S)(R_{α,β}) = R_{-α,-β} for β = 1/2
    Label b{Rat(1, 2)};
    RTensor Rab = A.r_matrix(a, b);
    RTensor Rmm = A.r_matrix(-a, -b);
    TensorElem lhs, rhs2;
    lhs.p1 = Rmm.p1;
    lhs.p2 = Rmm.p2;
    rhs2 = lhs;
    for (auto& [r1, r2] : Rab.terms) {
      AlgElem s1 = A.rebase_upper(A.antipode(r1), Rmm.p1.upper);
      AlgElem s2 = A.rebase_upper(A.antipode(r2), Rmm.p2.upper);
      for (auto& [i, ci] : s1.co)
        for (auto& [j, cj] : s2.co) lhs.add_term(i, j, ci * cj);
    }
    for (auto& [r1, r2] : Rmm.terms)
      for (auto& [i, ci] : r1.co)
        for (auto& [j, cj] : r2.co) rhs2.add_term(i, j, ci * cj);
    lhs.normalize();
    rhs2.normalize();
    bool ok11 = lhs.co.size() == rhs2.co.size();
    if (ok11)
      for (size_t k = 0; k < lhs.co.size(); ++k)
        if (lhs.co[k].first != rhs2.co[k].first ||
            !(lhs.co[k].second == rhs2.co[k].second))
          ok11 = false;
    printf("alpha=%s  R11 (S⊗S)R = R_{-α,-β}: %s\n", ar.str().c_str(),
           ok11 ? "ok" : "FAIL");
  }
  return 0;
}
