#pragma once

#include <cstdint>

#include "matgerm/polynomial.hpp"

namespace matgerm {

/// splitmix64; fixed algorithm so seeded output is identical across
/// platforms and standard library implementations.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  long range(long lo, long hi) {  // inclusive
    return lo + long(below(uint64_t(hi - lo + 1)));
  }

private:
  uint64_t state_;
};

/// Deterministic random polynomial: `term_count` distinct monomials with
/// total degree in [min_total_degree, max_total_degree] and nonzero integer
/// coefficients in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(int varcount, int max_total_degree, int term_count,
                             long coeff_bound, uint64_t seed, int min_total_degree = 1);

Polynomial random_polynomial(int varcount, int max_total_degree, int term_count,
                             long coeff_bound, Rng& rng, int min_total_degree = 1);

}  // namespace matgerm
