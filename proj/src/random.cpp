#include "matgerm/random.hpp"

namespace matgerm {

Polynomial random_polynomial(int varcount, int max_total_degree, int term_count,
                             long coeff_bound, Rng& rng, int min_total_degree) {
  if (varcount < 1 || max_total_degree < min_total_degree || term_count < 1 || coeff_bound < 1)
    throw std::invalid_argument("random_polynomial: bad parameters");
  Polynomial p(varcount);
  int placed = 0;
  int attempts = 0;
  const int max_attempts = 64 * term_count;
  while (placed < term_count && attempts < max_attempts) {
    ++attempts;
    long d = rng.range(min_total_degree, max_total_degree);
    Monomial m(varcount);
    for (long i = 0; i < d; ++i) m[rng.below(uint64_t(varcount))] += 1;
    if (p.terms().count(m)) continue;  // keep monomials distinct
    long c = rng.range(1, coeff_bound);
    if (rng.below(2)) c = -c;
    p.add_term(m, c);
    ++placed;
  }
  return p;
}

Polynomial random_polynomial(int varcount, int max_total_degree, int term_count,
                             long coeff_bound, uint64_t seed, int min_total_degree) {
  Rng rng(seed);
  return random_polynomial(varcount, max_total_degree, term_count, coeff_bound, rng,
                           min_total_degree);
}

}  // namespace matgerm
