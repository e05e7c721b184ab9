#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matgerm/germ.hpp"
#include "matgerm/random.hpp"

namespace matgerm {

struct IdentityResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;  // human-readable locator for the first failure
};

struct IdentitySuiteReport {
  uint64_t seed = 0;
  long cases_per_identity = 0;
  std::vector<IdentityResult> results;
  bool all_passed = false;
};

/// A random germ for property testing: zero-constant-term entries of total
/// degree <= 3 with small integer coefficients.
GermPresentation random_germ(int n, int r, Rng& rng);

/// Exercises the algebraic identities behind the constructive witnesses on
/// random germs over n in {1,2,3}, r in {2,3,4}: Laplace row expansion,
/// alien-cofactor annihilation, the cofactor transposition signs, and the
/// three witness certificate families.
IdentitySuiteReport run_identity_suite(uint64_t seed, long cases);

}  // namespace matgerm
