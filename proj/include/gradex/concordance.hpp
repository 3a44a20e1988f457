#pragma once

#include <map>
#include <string>

#include "gradex/algebra.hpp"
#include "gradex/module.hpp"

namespace gradex {

/// Named comparisons between main-path answers and the brute-force oracles.
struct OracleDiff {
  std::map<std::string, bool> checks;
  bool agree() const;
};

/// Classification flags, nilradical, graded primes and Hom(R, R) (finite fields).
OracleDiff oracle_diff(const AlgebraPtr& R);
/// Graded submodules, Hom(M, M), and superfluous / essential answers for the
/// radical and socle inclusions (finite fields).
OracleDiff oracle_diff(const GradedModule& M);

}  // namespace gradex
