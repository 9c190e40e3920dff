#include <cstdio>

#include "hopfg/uqsl2.hpp"

using namespace hopfg;

int main() {
  UqSl2 A(3, 4);
  const Field& Fl = A.field();
  Label a{Rat(1, 2)};

  // R16: g x g^{-1} = S_{-a}(S_a(x)) on a few basis vectors
  {
    bool ok = true;
    for (int idx : {1, 3, 9, 14}) {
      AlgElem x = A.k_basis_elem({a, Label(Rat(1, 2))}, idx / 9, (idx / 3) % 3, idx % 3);
      AlgElem lhs = A.product(A.product(A.pivotal(a), x), A.pivotal_inv(a));
      AlgElem rhs = A.antipode(A.antipode(x));
      if (!A.elems_equal(A.rebase_upper(lhs, rhs.piece.upper), rhs)) ok = false;
    }
    printf("R16 (gxg^-1 = S^2): %s\n", ok ? "ok" : "FAIL");
  }

  // R1 for R_{a,-a}: R Δ(x) = Δ^op(x) R on a basis vector of H_{a+(-a)}^γ = H_0^γ
  {
    RTensor R = A.r_matrix(a, -a);
    AlgElem x = A.k_basis_elem({Label(Rat(0)), Label(Rat(1))}, 1, 0, 1);
    TensorElem dx = A.coproduct(x, a, -a);
    // lhs = Σ R' x1 ⊗ R'' x2 ; rhs = Σ x2 R' ⊗ x1 R''  (Δ components swapped)
    TensorElem lhs, rhs;
    lhs.p1 = rhs.p1 = R.p1;
    lhs.p2 = rhs.p2 = R.p2;
    for (auto& [r1, r2] : R.terms)
      for (auto& [ij, c] : dx.co) {
        AlgElem x1 = A.k_basis_elem(dx.p1, ij.first / 9, (ij.first / 3) % 3, ij.first % 3);
        AlgElem x2 = A.k_basis_elem(dx.p2, ij.second / 9, (ij.second / 3) % 3, ij.second % 3);
        AlgElem l1 = A.product(r1, x1), l2 = A.product(r2, x2);
        for (auto& [i1, c1] : l1.co)
          for (auto& [i2, c2] : l2.co) lhs.add_term(i1, i2, c * c1 * c2);
        // Δ^op: x_(2,a) ⊗ x_(1,-a) — recompute split the other way
      }
    TensorElem dx2 = A.coproduct(x, -a, a);
    for (auto& [r1, r2] : R.terms)
      for (auto& [ij, c] : dx2.co) {
        AlgElem x1 = A.k_basis_elem(dx2.p1, ij.first / 9, (ij.first / 3) % 3, ij.first % 3);
        AlgElem x2 = A.k_basis_elem(dx2.p2, ij.second / 9, (ij.second / 3) % 3, ij.second % 3);
        AlgElem m1 = A.product(x2, r1), m2 = A.product(x1, r2);
        for (auto& [i1, c1] : m1.co)
          for (auto& [i2, c2] : m2.co) rhs.add_term(i1, i2, c * c1 * c2);
      }
    lhs.normalize();
    rhs.normalize();
    // compare after rebasing is unnecessary: uppers match term-by-term
    bool ok = lhs.co.size() == rhs.co.size();
    if (ok)
      for (size_t k = 0; k < lhs.co.size(); ++k)
        if (lhs.co[k].first != rhs.co[k].first || !(lhs.co[k].second == rhs.co[k].second))
          ok = false;
    printf("R1 at (1/2,-1/2): %s  (|lhs|=%zu |rhs|=%zu)\n", ok ? "ok" : "FAIL",
           lhs.co.size(), rhs.co.size());
  }

  // R12-ish: u S^2(x) u^{-1}... first just check u x u^{-1} = S^2(x)
  {
    bool ok = true;
    AlgElem u = A.drinfeld_u(a), uin = A.drinfeld_u_inv(a);
    for (int idx : {1, 3, 9}) {
      AlgElem x = A.k_basis_elem({a, Label(Rat(1))}, idx / 9, (idx / 3) % 3, idx % 3);
      AlgElem lhs = A.product(A.product(u, x), uin);
      AlgElem rhs = A.antipode(A.antipode(x));
      if (!A.elems_equal(A.rebase_upper(lhs, rhs.piece.upper), rhs)) ok = false;
    }
    printf("R13 (uxu^-1 = S^2): %s\n", ok ? "ok" : "FAIL");
  }

  // S(v_a) vs v_{-a}: print difference sizes
  {
    AlgElem sv = A.antipode(A.ribbon(a));
    AlgElem vm = A.ribbon(-a);
    printf("S(v) piece upper rep %s ; v_-a upper rep %s\n",
           sv.piece.upper.str().c_str(), vm.piece.upper.str().c_str());
    AlgElem d = A.rebase_upper(sv, vm.piece.upper);
    for (auto& [i, c] : vm.co) d.add_term(i, -c);
    d.normalize();
    printf("S(v_a) - v_{-a}: %zu nonzero entries\n", d.co.size());
    for (auto& [i, c] : d.co) printf("  (%d): %s\n", i, c.str().c_str());
  }
  return 0;
}
