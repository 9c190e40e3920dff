#include <cstdio>

#include "hopfg/uqsl2.hpp"

using namespace hopfg;

int main() {
  UqSl2 A(3, 4);
  for (Rat ar : {Rat(0), Rat(1), Rat(1, 2)}) {
    for (Rat br : {Rat(0), Rat(1), Rat(1, 2)}) {
      Label a{ar}, b{br};
      bool ok = true;
      int bad = -1;
      for (int idx = 0; idx < 27; ++idx) {
        AlgElem x = A.k_basis_elem({a, b}, idx / 9, (idx / 3) % 3, idx % 3);
        // μ(S⊗id)Δ_{-α,α}(x) =? ε-part: η_α ε(x)... ε only defined lower 0;
        // (H9): μ_α^{-β,β}(S_{-α}^β ⊗ id)Δ_{-α,α}^β(x) = η_α ε^β(x)q... for x ∈ H_α^β?
        // x ∈ H_α^β: Δ_{-α, ...}: wait H9 source H_α^β split as (-α)+(2α)??
        // paper: μ_α^{-β,β} ∘ (S_{-α}^β ⊗ id) ∘ Δ_{-α,α}^β = η_α ∘ ε_0^β : H_α^β??
        // Δ_{-α,α}^β : H_0^β → H_{-α}^β ⊗ H_α^β  -- source is H_0^β!
        (void)x;
      }
      // correct H9 source: x ∈ H_0^β
      for (int idx = 0; idx < 27 && ok; ++idx) {
        AlgElem x = A.k_basis_elem({Label(Rat(0)), b}, idx / 9, (idx / 3) % 3, idx % 3);
        TensorElem d = A.coproduct(x, -a, a);
        AlgElem lhs;
        lhs.piece = {a, Label(Rat(0))};
        for (auto& [ij, c] : d.co) {
          AlgElem x1 = A.k_basis_elem(d.p1, ij.first / 9, (ij.first / 3) % 3, ij.first % 3);
          AlgElem x2 = A.k_basis_elem(d.p2, ij.second / 9, (ij.second / 3) % 3, ij.second % 3);
          AlgElem t = A.product(A.antipode(x1), x2);
          for (auto& [i, cc] : t.co) lhs.add_term(i, c * cc);
        }
        lhs.normalize();
        AlgElem rhs = A.unit(a);
        for (auto& [i, c] : rhs.co) c *= A.counit(x);
        rhs.normalize();
        AlgElem l0 = A.rebase_upper(lhs, Label(Rat(0)));
        AlgElem diff = l0;
        for (auto& [i, c] : rhs.co) diff.add_term(i, -c);
        diff.normalize();
        if (!diff.co.empty()) {
          ok = false;
          bad = idx;
        }
      }
      printf("H9 left at (alpha=%s, beta-upper=%s): %s%s\n", ar.str().c_str(),
             br.str().c_str(), ok ? "ok" : "FAIL at idx ",
             ok ? "" : std::to_string(bad).c_str());
    }
  }
  return 0;
}
