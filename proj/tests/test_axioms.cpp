#include <chrono>
#include <cstdio>

#include "doctest.h"
#include "hopfg/axioms.hpp"
#include "hopfg/uqsl2.hpp"

using namespace hopfg;

namespace {
std::vector<Label> sample_halves() {
  return {Label(Rat(0)), Label(Rat(1, 2)), Label(Rat(1)), Label(Rat(3, 2))};
}
}  // namespace

TEST_CASE("hopf axioms H1-H9 at r=3 on the order-4 subgroup") {
  UqSl2 A(3, 4);
  auto t0 = std::chrono::steady_clock::now();
  Report rep = check_hopf_axioms(A, sample_halves());
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  printf("H1-H9 (1/2)Z/2Z: %ld checks in %.1fs\n", rep.checks, dt);
  if (!rep.ok()) printf("%s\n", rep.to_json().c_str());
  CHECK(rep.ok());
}

TEST_CASE("derived identities H10-H13 at r=3") {
  UqSl2 A(3, 4);
  Report rep = check_derived_hopf(A, sample_halves());
  if (!rep.ok()) printf("%s\n", rep.to_json().c_str());
  CHECK(rep.ok());
}

TEST_CASE("ribbon axioms and derived identities at r=3") {
  UqSl2 A(3, 4);
  auto t0 = std::chrono::steady_clock::now();
  Report rep = check_ribbon(A, sample_halves());
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  printf("R1-R16: %ld checks in %.1fs\n", rep.checks, dt);
  if (!rep.ok()) printf("%s\n", rep.to_json().c_str());
  CHECK(rep.ok());
}

TEST_CASE("integral axioms and derived identities at r=3") {
  UqSl2 A(3, 4);
  Report rep = check_integrals(A, sample_halves());
  if (!rep.ok()) printf("%s\n", rep.to_json().c_str());
  CHECK(rep.ok());
}

TEST_CASE("report JSON schema") {
  Report rep;
  rep.checks = 2;
  rep.failures.push_back({"H1", "(0,0,0,0)", "E^0 F^(0) K^0", "a", "b"});
  std::string j = rep.to_json();
  CHECK(j.find("\"axiom\"") != std::string::npos);
  CHECK(j.find("\"labels\"") != std::string::npos);
  CHECK(j.find("\"witness\"") != std::string::npos);
  CHECK(j.find("\"lhs\"") != std::string::npos);
  CHECK(j.find("\"rhs\"") != std::string::npos);
}
