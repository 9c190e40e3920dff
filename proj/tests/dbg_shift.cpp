#include <cstdio>

#include "hopfg/uqsl2.hpp"

using namespace hopfg;

int main() {
  UqSl2 A(3, 4);
  UqSl2 As(3, 4, true);
  auto expand = [&](const RTensor& R) {
    TensorElem t;
    t.p1 = R.p1;
    t.p2 = R.p2;
    for (auto& [x1, x2] : R.terms)
      for (auto& [i, ci] : x1.co)
        for (auto& [j, cj] : x2.co) t.add_term(i, j, ci * cj);
    t.normalize();
    return t;
  };
  for (auto [ar, br] : std::vector<std::pair<Rat, Rat>>{{Rat(0), Rat(0)},
                                                        {Rat(1, 2), Rat(1)}}) {
    Label a{ar}, b{br};
    TensorElem t1 = expand(A.r_matrix(a, b));
    RTensor Rs = As.r_matrix(a, b);
    printf("pair (%s,%s): unshifted uppers (%s,%s), shifted uppers (%s,%s)\n",
           ar.str().c_str(), br.str().c_str(), t1.p1.upper.str().c_str(),
           t1.p2.upper.str().c_str(), Rs.p1.upper.str().c_str(),
           Rs.p2.upper.str().c_str());
    TensorElem t2;
    t2.p1 = t1.p1;
    t2.p2 = t1.p2;
    for (auto& [x1, x2] : Rs.terms) {
      AlgElem y1 = As.rebase_upper(x1, t1.p1.upper);
      AlgElem y2 = As.rebase_upper(x2, t1.p2.upper);
      for (auto& [i, ci] : y1.co)
        for (auto& [j, cj] : y2.co) t2.add_term(i, j, ci * cj);
    }
    t1.normalize();
    t2.normalize();
    printf("  sizes %zu vs %zu\n", t1.co.size(), t2.co.size());
    size_t shown = 0;
    for (size_t k = 0; k < std::max(t1.co.size(), t2.co.size()) && shown < 4; ++k) {
      bool same = k < t1.co.size() && k < t2.co.size() &&
                  t1.co[k].first == t2.co[k].first &&
                  t1.co[k].second == t2.co[k].second;
      if (!same) {
        ++shown;
        if (k < t1.co.size())
          printf("  t1[%zu] (%d,%d): %s\n", k, t1.co[k].first.first,
                 t1.co[k].first.second, t1.co[k].second.str().c_str());
        if (k < t2.co.size())
          printf("  t2[%zu] (%d,%d): %s\n", k, t2.co[k].first.first,
                 t2.co[k].first.second, t2.co[k].second.str().c_str());
      }
    }
  }
  return 0;
}
