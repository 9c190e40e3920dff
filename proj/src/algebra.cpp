#include "hopfg/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfg {

void AlgElem::normalize() {
  std::sort(co.begin(), co.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t i = 0; i < co.size();) {
    int idx = co[i].first;
    Cyc c = co[i].second;
    size_t j = i + 1;
    while (j < co.size() && co[j].first == idx) c += co[j++].second;
    if (!c.is_zero()) {
      co[w].first = idx;
      co[w].second = std::move(c);
      ++w;
    }
    i = j;
  }
  co.resize(w);
}

void TensorElem::normalize() {
  std::sort(co.begin(), co.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t i = 0; i < co.size();) {
    auto ij = co[i].first;
    Cyc c = co[i].second;
    size_t j = i + 1;
    while (j < co.size() && co[j].first == ij) c += co[j++].second;
    if (!c.is_zero()) {
      co[w].first = ij;
      co[w].second = std::move(c);
      ++w;
    }
    i = j;
  }
  co.resize(w);
}

AlgElem HopfGAlgebra::adjoint_act(const AlgElem& x, const AlgElem& y) const {
  if (!x.piece.lower.is_zero_label())
    throw std::invalid_argument("adjoint_act: acting element must have lower label 0");
  const Label alpha = y.piece.lower;
  TensorElem dx = coproduct(x, alpha, -alpha);
  AlgElem out;
  out.piece = y.piece;
  int rp = rprime();
  int d = rp * rp * rp;
  (void)d;
  for (auto& [ij, c] : dx.co) {
    AlgElem x1;
    x1.piece = dx.p1;
    x1.add_term(ij.first, c);
    AlgElem x2;
    x2.piece = dx.p2;
    x2.add_term(ij.second, field().one());
    AlgElem t = product(product(x1, y), antipode(x2));
    for (auto& [i2, c2] : t.co) out.add_term(i2, c2);
  }
  // upper representative comes out as γ + β - γ = β exactly
  out.normalize();
  return out;
}

AlgElem HopfGAlgebra::drinfeld_map(const Label& alpha, const Label& beta,
                                   const std::function<Cyc(const AlgElem&)>& f) const {
  RTensor Ri = r_matrix(beta, alpha);  // (R'_i)_β^{α/2} ⊗ (R''_i)_α^{β/2}
  RTensor Rj = r_matrix(alpha, beta);  // (R'_j)_α^{β/2} ⊗ (R''_j)_β^{α/2}
  AlgElem out;
  out.piece = {beta, alpha};
  bool first = true;
  for (auto& [ri1, ri2] : Ri.terms)
    for (auto& [rj1, rj2] : Rj.terms) {
      AlgElem arg = rebase_upper(product(ri2, rj1), beta);
      Cyc c = f(arg);
      if (c.is_zero()) continue;
      AlgElem val = rebase_upper(product(ri1, rj2), alpha);
      for (auto& [i, cv] : val.co) out.add_term(i, c * cv);
      first = false;
    }
  (void)first;
  out.normalize();
  return out;
}

bool HopfGAlgebra::elems_equal(const AlgElem& x, const AlgElem& y) const {
  if (!same_label(x.piece.lower, y.piece.lower)) return false;
  Rat diff = x.piece.upper.rep() - y.piece.upper.rep();
  if (!diff.is_integer()) return false;
  AlgElem yy = rebase_upper(y, x.piece.upper);
  AlgElem d = x;
  for (auto& [i, c] : yy.co) d.add_term(i, -c);
  d.normalize();
  return d.co.empty();
}

}  // namespace hopfg
