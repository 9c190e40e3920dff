#include "hopfg/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfg {

namespace mp = boost::multiprecision;
using BigRat = mp::cpp_rational;

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Divisors of n in increasing order.
std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

// Exact division of integer polynomials: num / den, remainder must vanish.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
  std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
  for (long i = (long)q.size() - 1; i >= 0; --i) {
    std::int64_t c = num[i + den.size() - 1];
    if (c % den.back() != 0) throw std::logic_error("poly_div_exact: not exact");
    c /= den.back();
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (auto v : num)
    if (v != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

Field::Field(int r, int D) : r_(r), D_(D) {
  if (r < 3 || r % 2 == 0) throw std::invalid_argument("Field: r must be odd, >= 3");
  if (D < 1) throw std::invalid_argument("Field: D must be >= 1");
  N_ = lcm_long(4L * r, 2L * r * (long)D * (long)D);
  build_cyclotomic_polynomial();
  build_reduction_rows();
  zeta_num_.resize(N_);
  for (long k = 0; k < N_; ++k) {
    double t = 2.0 * M_PI * double(k) / double(N_);
    zeta_num_[k] = {std::cos(t), std::sin(t)};
  }
}

void Field::build_cyclotomic_polynomial() {
  // Φ_N via repeated exact division of x^d - 1 by Φ_e, e | d, e < d.
  std::vector<std::vector<std::int64_t>> phi_of;  // by divisor index
  auto divs = divisors(N_);
  phi_of.resize(divs.size());
  for (size_t di = 0; di < divs.size(); ++di) {
    long d = divs[di];
    std::vector<std::int64_t> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (size_t dj = 0; dj < di; ++dj)
      if (d % divs[dj] == 0) poly = poly_div_exact(poly, phi_of[dj]);
    phi_of[di] = poly;
  }
  cyclo_ = phi_of.back();
  phi_ = (long)cyclo_.size() - 1;
}

void Field::build_reduction_rows() {
  red_rows_.assign(N_, {});
  for (long k = 0; k < phi_; ++k) {
    red_rows_[k].assign(phi_, Rat(0));
    red_rows_[k][k] = Rat(1);
  }
  // ζ^k = -(1/lead) Σ_{j<phi} cyclo_[j] ζ^{k-phi+j}, lead = 1 (Φ_N monic)
  for (long k = phi_; k < N_; ++k) {
    std::vector<Rat> row(phi_, Rat(0));
    for (long j = 0; j < phi_; ++j) {
      if (cyclo_[j] == 0) continue;
      Rat c = Rat(-cyclo_[j]);
      const auto& prev = red_rows_[k - phi_ + j];
      for (long t = 0; t < phi_; ++t)
        if (!prev[t].is_zero()) row[t] += c * prev[t];
    }
    red_rows_[k] = std::move(row);
  }
}

Cyc Field::zeta_pow(long k) const {
  k %= N_;
  if (k < 0) k += N_;
  return Cyc::monomial(this, k, Rat(1));
}

Cyc Field::zero() const { return Cyc(this); }
Cyc Field::one() const { return Cyc::monomial(this, 0, Rat(1)); }
Cyc Field::rational(const Rat& c) const { return Cyc::monomial(this, 0, c); }
Cyc Field::from_int(std::int64_t n) const { return rational(Rat(n)); }

Cyc Field::q_pow(const Rat& e) const {
  // q^e = ζ^{e N / r}
  long step = N_ / r_;
  __int128 num = (__int128)e.num() * step;
  if (num % e.den() != 0)
    throw std::domain_error("q_pow: field too small for exponent " + e.str());
  long k = (long)((num / e.den()) % N_);
  if (k < 0) k += N_;
  return Cyc::monomial(this, k, Rat(1));
}

Cyc Field::q_power(const Rat& e) const {
  if ((2L * D_) % e.den() != 0)
    throw std::domain_error("q_power: denominator of " + e.str() +
                            " exceeds 2D (field too small)");
  return q_pow(e);
}

Cyc Field::brace(const Rat& e) const { return q_pow(e) - q_pow(-e); }

Cyc Field::qint(long k) const {
  // [k] = {k}/{1} = q^{k-1} + q^{k-3} + ... + q^{1-k}
  Cyc s = zero();
  for (long j = k - 1; j >= 1 - k; j -= 2) s += q_pow(Rat(j));
  return s;
}

Cyc Field::qfact(long k) const {
  Cyc s = one();
  for (long j = 2; j <= k; ++j) s *= qint(j);
  return s;
}

Cyc Field::qbinom(long n, long k) const {
  if (k < 0 || k > n) return zero();
  return qfact(n) * (qfact(k) * qfact(n - k)).inverse();
}

Cyc Field::brace_falling(const Rat& n, long k) const {
  Cyc s = one();
  for (long j = 0; j < k; ++j) s *= brace(n - Rat(j));
  return s;
}

Cyc Field::sqrt_rprime() const {
  if (sqrt_cache_) return *sqrt_cache_;
  // Gauss sum g = Σ_{k=0}^{r-1} ζ_r^{k²}: g = √r (r ≡ 1 mod 4), i√r (r ≡ 3).
  Cyc g = zero();
  long step = N_ / r_;
  for (long k = 0; k < r_; ++k) g += zeta_pow(step * ((k * k) % r_));
  Cyc s(this);
  if (r_ % 4 == 1) {
    s = g;
  } else {
    // -i = ζ_N^{3N/4}
    s = g * zeta_pow(3 * N_ / 4);
  }
  if (s * s != from_int(r_)) throw std::logic_error("sqrt_rprime: self-check failed");
  sqrt_cache_ = std::make_shared<Cyc>(s);
  return s;
}

Cyc Cyc::monomial(const Field* f, long exp, const Rat& c) {
  Cyc x(f);
  if (!c.is_zero()) {
    exp %= f->N();
    if (exp < 0) exp += f->N();
    x.terms_.push_back({(std::int32_t)exp, c});
    x.fold_halfturn();
  }
  return x;
}

Cyc Cyc::from_terms(const Field* f, std::vector<Term> terms) {
  Cyc x(f);
  x.terms_ = std::move(terms);
  x.fold_halfturn();
  x.sort_merge();
  return x;
}

void Cyc::fold_halfturn() {
  long half = field_->N() / 2;
  bool changed = false;
  for (auto& t : terms_)
    if (t.exp >= half) {
      t.exp -= (std::int32_t)half;
      t.c = -t.c;
      changed = true;
    }
  if (changed) sort_merge();
}

void Cyc::sort_merge() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  size_t w = 0;
  for (size_t i = 0; i < terms_.size();) {
    std::int32_t e = terms_[i].exp;
    Rat c = terms_[i].c;
    size_t j = i + 1;
    while (j < terms_.size() && terms_[j].exp == e) c += terms_[j++].c;
    if (!c.is_zero()) terms_[w++] = {e, c};
    i = j;
  }
  terms_.resize(w);
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  Cyc r = a;
  r += b;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& b) {
  if (!field_) field_ = b.field_;
  terms_.insert(terms_.end(), b.terms_.begin(), b.terms_.end());
  sort_merge();
  return *this;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  Cyc r = a;
  r -= b;
  return r;
}

Cyc& Cyc::operator-=(const Cyc& b) {
  if (!field_) field_ = b.field_;
  terms_.reserve(terms_.size() + b.terms_.size());
  for (const auto& t : b.terms_) terms_.push_back({t.exp, -t.c});
  sort_merge();
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  const Field* f = a.field_ ? a.field_ : b.field_;
  Cyc r(f);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  long N = f->N();
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      long e = (long)ta.exp + tb.exp;
      if (e >= N) e -= N;
      r.terms_.push_back({(std::int32_t)e, ta.c * tb.c});
    }
  r.fold_halfturn();
  r.sort_merge();
  return r;
}

Cyc& Cyc::mul_monomial(long exp, const Rat& c) {
  long N = field_->N();
  exp %= N;
  if (exp < 0) exp += N;
  for (auto& t : terms_) {
    long e = t.exp + exp;
    if (e >= N) e -= N;
    t.exp = (std::int32_t)e;
    t.c *= c;
  }
  fold_halfturn();
  sort_merge();
  return *this;
}

Cyc& Cyc::mul_rat(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

bool Cyc::is_zero() const {
  if (terms_.empty()) return true;
  long phi = field_->phi();
  // quick exit: already in power basis with distinct exponents
  bool in_basis = true;
  for (const auto& t : terms_)
    if (t.exp >= phi) {
      in_basis = false;
      break;
    }
  if (in_basis) return false;  // sorted, merged, nonzero coefficients
  // numeric prefilter: a value far from 0 cannot be 0
  std::complex<double> v = numeric();
  double scale = 0;
  for (const auto& t : terms_) scale += std::abs(t.c.to_double());
  if (std::abs(v) > 1e-7 * std::max(1.0, scale)) return false;
  auto can = canonical();
  for (const auto& c : can)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Rat> Cyc::canonical() const {
  long phi = field_->phi();
  std::vector<Rat> out(phi, Rat(0));
  for (const auto& t : terms_) {
    const auto& row = field_->reduction_row(t.exp);
    for (long j = 0; j < phi; ++j)
      if (!row[j].is_zero()) out[j] += t.c * row[j];
  }
  return out;
}

void Cyc::canonicalize() {
  auto can = canonical();
  terms_.clear();
  for (long j = 0; j < (long)can.size(); ++j)
    if (!can[j].is_zero()) terms_.push_back({(std::int32_t)j, can[j]});
}

std::complex<double> Cyc::numeric() const {
  std::complex<double> v{0, 0};
  for (const auto& t : terms_) v += t.c.to_double() * field_->zeta_numeric(t.exp);
  return v;
}

std::string Cyc::str() const {
  auto can = canonical();
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < can.size(); ++j) {
    if (can[j].is_zero()) continue;
    if (!first) os << " + ";
    os << can[j].str();
    if (j > 0) os << "*z^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyc Cyc::inverse() const {
  // Extended Euclid in ℚ[x] against Φ_N, bignum rationals (cold path).
  if (is_zero()) throw std::domain_error("Cyc: division by zero");
  long phi = field_->phi();
  auto can = canonical();
  std::vector<BigRat> a(phi + 1), b;  // a = Φ_N, b = this
  for (long j = 0; j <= phi; ++j) a[j] = BigRat(field_->cyclo_[j]);
  b.resize(phi);
  for (long j = 0; j < phi; ++j) b[j] = BigRat(can[j].num(), can[j].den());
  while (!b.empty() && b.back() == 0) b.pop_back();

  auto degree = [](const std::vector<BigRat>& p) { return (long)p.size() - 1; };
  std::vector<BigRat> s0{BigRat(0)}, s1{BigRat(1)};  // coeffs of `this`
  // invariant: a = s0 * this (mod Φ), b = s1 * this (mod Φ)
  while (degree(b) > 0 || (degree(b) == 0 && false)) {
    if (degree(b) == 0) break;
    // a = q*b + rem
    std::vector<BigRat> rem = a;
    std::vector<BigRat> q(std::max<long>(degree(a) - degree(b) + 1, 1), BigRat(0));
    for (long i = degree(rem); i >= degree(b); --i) {
      if (rem[i] == 0) continue;
      BigRat c = rem[i] / b.back();
      q[i - degree(b)] = c;
      for (long j = 0; j <= degree(b); ++j) rem[i - degree(b) + j] -= c * b[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) throw std::logic_error("Cyc::inverse: common factor with Phi_N");
    // s_new = s0 - q*s1
    std::vector<BigRat> snew(std::max(s0.size(), q.size() + s1.size()), BigRat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    }
    while (!snew.empty() && snew.back() == 0) snew.pop_back();
    a = b;
    s0 = s1;
    b = rem;
    s1 = snew;
  }
  if (b.empty()) throw std::logic_error("Cyc::inverse: zero gcd");
  // b is a nonzero constant: inverse = s1 / b[0], reduced mod Φ_N
  Cyc out(field_);
  for (size_t j = 0; j < s1.size(); ++j) {
    BigRat c = s1[j] / b[0];
    if (c == 0) continue;
    BigRat nn = mp::numerator(c), dd = mp::denominator(c);
    if (nn > INT64_MAX || nn < INT64_MIN || dd > INT64_MAX)
      throw std::overflow_error("Cyc::inverse: coefficient exceeds 64 bits");
    out.terms_.push_back({(std::int32_t)(j % field_->N()),
                          Rat((std::int64_t)nn, (std::int64_t)dd)});
  }
  out.sort_merge();
  out.canonicalize();
  return out;
}

Cyc field_arith(const Cyc& a, const Cyc& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div:
      if (b.is_zero()) throw std::domain_error("field_arith: division by zero");
      return a / b;
  }
  throw std::logic_error("field_arith: bad op");
}

}  // namespace hopfg
