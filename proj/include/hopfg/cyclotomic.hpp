#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfg/rational.hpp"

namespace hopfg {

class Cyc;

/// The fixed cyclotomic ground field ℚ(ζ_N), ζ_N = e^{2πi/N}.
///
/// N is chosen from (r, D) so that the field contains q = e^{2πi/r}, every
/// q^α for labels α with denominator dividing D (and their halves), the
/// global R-matrix scalars q^{αβ/2}, and √r'.  Elements are kept as sparse
/// sums Σ c_k ζ^k with 0 ≤ k < N; canonical (power-basis, degree < φ(N))
/// form is used for equality and printing.
class Field {
 public:
  /// r: odd root order ≥ 3.  D: common denominator bound of label
  /// representatives.  N = lcm(4r, 2rD²).
  Field(int r, int D);

  int r() const { return r_; }
  int rprime() const { return r_; }  // r odd, r' = r
  int D() const { return D_; }
  long N() const { return N_; }
  long phi() const { return phi_; }

  /// ζ_N^k as a scalar.
  Cyc zeta_pow(long k) const;
  Cyc zero() const;
  Cyc one() const;
  Cyc rational(const Rat& c) const;
  Cyc from_int(std::int64_t n) const;

  /// q^e for exact rational e = p/q.  Requires that e·N/r is an integer
  /// (the field is large enough); otherwise throws ("field too small").
  Cyc q_pow(const Rat& e) const;

  /// Spec-facing q_power: additionally enforces den(e) | 2D.
  Cyc q_power(const Rat& e) const;

  /// {e} = q^e - q^{-e}
  Cyc brace(const Rat& e) const;
  /// [k] = {k}/{1}
  Cyc qint(long k) const;
  /// [k]!
  Cyc qfact(long k) const;
  /// quantum binomial [n; k]
  Cyc qbinom(long n, long k) const;
  /// {n; k} = Π_{j=0}^{k-1} {n-j} with rational n
  Cyc brace_falling(const Rat& n, long k) const;

  /// √r', canonical positive real embedding (Gauss sum based).
  Cyc sqrt_rprime() const;

  /// Reduction row: ζ^k expressed in the power basis 1,ζ,…,ζ^{φ(N)-1}.
  const std::vector<Rat>& reduction_row(long k) const { return red_rows_[k]; }

  std::complex<double> zeta_numeric(long k) const { return zeta_num_[k]; }

 private:
  void build_cyclotomic_polynomial();
  void build_reduction_rows();

  int r_, D_;
  long N_, phi_;
  std::vector<std::int64_t> cyclo_;          // Φ_N coefficients, degree phi_
  std::vector<std::vector<Rat>> red_rows_;   // N rows of length phi_
  std::vector<std::complex<double>> zeta_num_;
  mutable std::shared_ptr<Cyc> sqrt_cache_;

  friend class Cyc;
};

/// Exact element of ℚ(ζ_N): sparse sorted term list over ζ-powers.
class Cyc {
 public:
  struct Term {
    std::int32_t exp;  // 0 ≤ exp < N
    Rat c;
  };

  Cyc() : field_(nullptr) {}
  explicit Cyc(const Field* f) : field_(f) {}

  const Field* field() const { return field_; }
  bool empty_terms() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  static Cyc monomial(const Field* f, long exp, const Rat& c);
  /// From raw terms (exponents already in [0, N)); sorts, folds, merges.
  static Cyc from_terms(const Field* f, std::vector<Term> terms);

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  Cyc operator-() const;
  Cyc& operator+=(const Cyc& b);
  Cyc& operator-=(const Cyc& b);
  Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
  Cyc& mul_monomial(long exp, const Rat& c);
  Cyc& mul_rat(const Rat& c);

  /// Multiplicative inverse; throws on zero.
  Cyc inverse() const;
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  bool is_zero() const;
  friend bool operator==(const Cyc& a, const Cyc& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Canonical coefficient vector in the power basis (length φ(N)).
  std::vector<Rat> canonical() const;

  /// In-place: rewrite the term list into canonical power-basis form.
  void canonicalize();

  std::complex<double> numeric() const;

  /// Deterministic printing: "c0 + c1*z^1 + ..." over canonical form.
  std::string str() const;

 private:
  void fold_halfturn();  // use ζ^{N/2} = -1 to keep exponents in [0, N/2)
  void sort_merge();

  const Field* field_;
  std::vector<Term> terms_;
};

enum class FieldOp { add, sub, mul, div };

/// Spec operation: exact field arithmetic dispatch.
Cyc field_arith(const Cyc& a, const Cyc& b, FieldOp op);

}  // namespace hopfg
