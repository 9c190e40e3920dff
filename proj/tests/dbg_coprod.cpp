#include <cstdio>

#include "hopfg/uqsl2.hpp"

using namespace hopfg;

int main() {
  UqSl2 A(3, 4);
  const Field& Fl = A.field();
  Rat a1(1, 2), a2(1, 2);
  Label l1{a1}, l2{a2}, l{a1 + a2};
  PieceRef p{l, Label(Rat(1, 2))};

  // find smallest failing (a,b,n)
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int n = 0; n < 3; ++n) {
        AlgElem fa = A.k_basis_elem({p.lower, Label(Rat(0))}, 0, a, 0);
        AlgElem eb = A.k_basis_elem({p.lower, Label(Rat(0))}, b, 0, 0);
        AlgElem t = A.t_basis_elem(p, 0, 0, n);
        AlgElem x = A.product(A.product(fa, eb), t);
        TensorElem lhs = A.coproduct(x, l1, l2);
        Rat alpha_sub = Rat(2 * n) + l.rep();
        TensorElem rhs;
        rhs.p1 = {l1, p.upper};
        rhs.p2 = {l2, p.upper};
        for (int c = 0; c < 3; ++c)
          for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
              Cyc coef = Fl.qbinom(b, j) *
                         Fl.q_pow((Rat(a) - alpha_sub) * Rat(i) + Rat(b * j) -
                                  Rat(2 * c * (i + j)) - Rat((i + j) * (i + j)));
              AlgElem f1 = A.product(
                  A.product(A.k_basis_elem({l1, Label(Rat(0))}, 0, a - i, 0),
                            A.k_basis_elem({l1, Label(Rat(0))}, j, 0, 0)),
                  A.normalize_T(Rat(2 * c) + alpha_sub, p.upper.rep(), {l1, p.upper}));
              AlgElem f2 = A.product(
                  A.product(A.k_basis_elem({l2, Label(Rat(0))}, 0, i, 0),
                            A.k_basis_elem({l2, Label(Rat(0))}, b - j, 0, 0)),
                  A.normalize_T(Rat(-2 * c), p.upper.rep(), {l2, p.upper}));
              for (auto& [i1, c1] : f1.co)
                for (auto& [i2, c2] : f2.co) rhs.add_term(i1, i2, coef * c1 * c2);
            }
        lhs.normalize();
        rhs.normalize();
        bool eq = lhs.co.size() == rhs.co.size();
        if (eq)
          for (size_t k = 0; k < lhs.co.size(); ++k)
            if (lhs.co[k].first != rhs.co[k].first ||
                !(lhs.co[k].second == rhs.co[k].second)) {
              eq = false;
              break;
            }
        if (!eq) {
          printf("FAIL a=%d b=%d n=%d  |lhs|=%zu |rhs|=%zu\n", a, b, n, lhs.co.size(),
                 rhs.co.size());
          if (a + b <= 1) {
            for (auto& [ij, c] : lhs.co)
              printf("  lhs (%d,%d): %s\n", ij.first, ij.second, c.str().c_str());
            for (auto& [ij, c] : rhs.co)
              printf("  rhs (%d,%d): %s\n", ij.first, ij.second, c.str().c_str());
            return 0;
          }
        }
      }
  printf("done\n");
  return 0;
}
