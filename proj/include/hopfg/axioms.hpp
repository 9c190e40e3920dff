#pragma once

#include <string>
#include <vector>

#include "hopfg/algebra.hpp"

namespace hopfg {

struct Failure {
  std::string axiom;
  std::string labels;
  std::string witness;
  std::string lhs;
  std::string rhs;
};

struct Report {
  long checks = 0;
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
  void merge(const Report& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
  std::string to_json() const;
};

/// Exhaustive verification of (H1)-(H9) over all label tuples from the sample
/// (closed under negation and pairwise sums) and all basis tuples.
Report check_hopf_axioms(const HopfGAlgebra& A, const std::vector<Label>& sample);

/// Derived antipode identities (H10)-(H13).
Report check_derived_hopf(const HopfGAlgebra& A, const std::vector<Label>& sample);

/// Ribbon axioms (R1)-(R7) and derived identities (R8)-(R16).
Report check_ribbon(const HopfGAlgebra& A, const std::vector<Label>& sample);

/// Integral axioms (I1)-(I5) and derived identities (I6)-(I8).
Report check_integrals(const HopfGAlgebra& A, const std::vector<Label>& sample);

}  // namespace hopfg
