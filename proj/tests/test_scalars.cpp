#include <random>

#include "doctest.h"
#include "hopfg/cyclotomic.hpp"

using namespace hopfg;

namespace {

Cyc random_elem(const Field& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<long> de(0, F.N() - 1);
  std::uniform_int_distribution<int> dn(-6, 6);
  std::uniform_int_distribution<int> dd(1, 4);
  Cyc x = F.zero();
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    x += Cyc::monomial(&F, de(rng), Rat(dn(rng), dd(rng)));
  return x;
}

}  // namespace

TEST_CASE("field ring axioms on randomized triples") {
  Field F(3, 4);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Cyc a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("multiplicative inverses of nonzero elements") {
  Field F(3, 2);
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 60) {
    Cyc a = random_elem(F, rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == F.one());
    ++done;
  }
  CHECK_THROWS_AS(F.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(field_arith(F.one(), F.zero(), FieldOp::div), std::domain_error);
}

TEST_CASE("field_arith examples") {
  Field F(3, 4);
  Cyc q = F.q_pow(Rat(1));
  CHECK(field_arith(q, -q, FieldOp::add).is_zero());
  // q^r = 1 at r = 3
  CHECK(q * q * q == F.one());
  // {1}·[2] = {2}
  CHECK(F.brace(Rat(1)) * F.qint(2) == F.brace(Rat(2)));
}

TEST_CASE("q_power is a homomorphism with kernel exactly rZ") {
  Field F(3, 4);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dn(-40, 40);
  for (int i = 0; i < 300; ++i) {
    Rat a(dn(rng), 8), b(dn(rng), 8);  // denominators divide 2D = 8
    CHECK(F.q_power(a) * F.q_power(b) == F.q_power(a + b));
  }
  for (int n = -12; n <= 12; ++n) {
    bool in_kernel = (n % 3 == 0);
    CHECK((F.q_power(Rat(n)) == F.one()) == in_kernel);
  }
  // halved labels: q_power(1/2)^2 = q_power(1); q_power(0) = 1
  CHECK(F.q_power(Rat(1, 2)) * F.q_power(Rat(1, 2)) == F.q_power(Rat(1)));
  CHECK(F.q_power(Rat(0)) == F.one());
  CHECK(F.q_power(Rat(1, 4)) * F.q_power(Rat(-1, 4)) == F.one());
  CHECK_THROWS_AS(F.q_power(Rat(1, 16)), std::domain_error);
}

TEST_CASE("canonicalization is idempotent") {
  Field F(5, 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Cyc a = random_elem(F, rng);
    Cyc b = a;
    b.canonicalize();
    Cyc c = b;
    c.canonicalize();
    CHECK(b.canonical() == c.canonical());
    CHECK(a == b);
  }
}

TEST_CASE("sqrt of r' squares to r' and has the positive embedding") {
  for (int r : {3, 5, 7}) {
    Field F(r, 2);
    Cyc s = F.sqrt_rprime();
    CHECK(s * s == F.from_int(r));
    CHECK(s * s.inverse() == F.one());
    CHECK(s.numeric().real() > 0);
    CHECK(std::abs(s.numeric().imag()) < 1e-9);
  }
}
