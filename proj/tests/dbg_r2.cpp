#include <cstdio>

#include "hopfg/uqsl2.hpp"

using namespace hopfg;

namespace {
UqSl2 A(3, 4);

AlgElem basis_of(const PieceRef& p, int idx) {
  return A.k_basis_elem(p, idx / 9, (idx / 3) % 3, idx % 3);
}

struct T3 {
  std::vector<std::pair<std::array<int, 3>, Cyc>> co;
  void add(int i, int j, int k, const Cyc& c) { co.push_back({{i, j, k}, c}); }
  void normalize() {
    std::sort(co.begin(), co.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::array<int, 3>, Cyc>> out;
    for (size_t i = 0; i < co.size();) {
      Cyc c = co[i].second;
      size_t j = i + 1;
      while (j < co.size() && co[j].first == co[i].first) c += co[j++].second;
      if (!c.is_zero()) out.push_back({co[i].first, c});
      i = j;
    }
    co = std::move(out);
  }
  bool eq(T3 b) {
    normalize();
    b.normalize();
    if (co.size() != b.co.size()) return false;
    for (size_t i = 0; i < co.size(); ++i)
      if (co[i].first != b.co[i].first || !(co[i].second == b.co[i].second))
        return false;
    return true;
  }
};

bool check_R2(Rat ar, Rat br, Rat gr) {
  Label al{ar}, be{br}, ga{gr};
  RTensor Rbg = A.r_matrix(al, Label(br + gr));
  T3 lhs;
  for (auto& [r1, r2] : Rbg.terms) {
    TensorElem d = A.coproduct(r2, be, ga);
    for (auto& [i1, c1] : r1.co)
      for (auto& [jk, c] : d.co) lhs.add(i1, jk.first, jk.second, c1 * c);
  }
  RTensor Rg = A.r_matrix(al, ga);
  RTensor Rb = A.r_matrix(al, be);
  T3 rhs;
  for (auto& [j1, j2] : Rg.terms)
    for (auto& [k1, k2] : Rb.terms) {
      AlgElem p1 = A.product(j1, k1);
      for (auto& [i1, c1] : p1.co)
        for (auto& [i2, c2] : k2.co)
          for (auto& [i3, c3] : j2.co) rhs.add(i1, i2, i3, c1 * c2 * c3);
    }
  return lhs.eq(rhs);
}

bool check_R3(Rat ar, Rat br, Rat gr) {
  Label al{ar}, be{br}, ga{gr};
  RTensor Rab = A.r_matrix(Label(ar + br), ga);
  T3 lhs;
  for (auto& [r1, r2] : Rab.terms) {
    TensorElem d = A.coproduct(r1, al, be);
    for (auto& [ij, c] : d.co)
      for (auto& [k, c2] : r2.co) lhs.add(ij.first, ij.second, k, c * c2);
  }
  RTensor Ra = A.r_matrix(al, ga);
  RTensor Rb = A.r_matrix(be, ga);
  T3 rhs;
  for (auto& [j1, j2] : Ra.terms)
    for (auto& [k1, k2] : Rb.terms) {
      AlgElem p3 = A.product(j2, k2);
      for (auto& [i1, c1] : j1.co)
        for (auto& [i2, c2] : k1.co)
          for (auto& [i3, c3] : p3.co) rhs.add(i1, i2, i3, c1 * c2 * c3);
    }
  return lhs.eq(rhs);
}
}  // namespace

int main() {
  struct Case {
    Rat a, b, g;
  };
  for (auto [a, b, g] : {Case{Rat(0), Rat(0), Rat(0)}, Case{Rat(1), Rat(1), Rat(0)},
                         Case{Rat(1, 2), Rat(1, 2), Rat(0)},
                         Case{Rat(1, 2), Rat(1, 2), Rat(1)},
                         Case{Rat(1, 2), Rat(1), Rat(1, 2)},
                         Case{Rat(1, 2), Rat(-1, 2), Rat(1, 2)}}) {
    printf("R2(%s;%s,%s): %s   ", a.str().c_str(), b.str().c_str(), g.str().c_str(),
           check_R2(a, b, g) ? "ok" : "FAIL");
    printf("R3(%s,%s;%s): %s\n", a.str().c_str(), b.str().c_str(), g.str().c_str(),
           check_R3(a, b, g) ? "ok" : "FAIL");
  }
  return 0;
}
