#pragma once

#include <optional>
#include <string>

#include "matgerm/germ.hpp"
#include "matgerm/jetspace.hpp"

namespace matgerm {

enum class Verdict { Contained, NotContained, Inconclusive };

/// Rational: exact arithmetic only. PrimeScreen: run the F_p pre-screen
/// alongside and record agreement; every verdict is still established
/// over the rationals.
enum class FieldMode { Rational, PrimeScreen };

const char* to_cstring(Verdict v);

struct DeterminacyReport {
  std::string criterion;
  int k = 0;
  Verdict verdict = Verdict::Inconclusive;
  long truncation_degree = -1;
  std::string witness;  // failing monomial (times unit entry) when NotContained
  std::string note;
  long rank_q = -1;
  long rank_fp = -1;
  bool fp_used = false;
  bool fp_agreed = true;
  bool fp_escalated = false;
};

/// M^(k+1)*Mat contained in M^2*J(M) + M*Im(g), decided at truncation
/// degree k+1. Contained means "k-determined (sufficient)".
DeterminacyReport check_infinitesimal(const GermPresentation& g, int k,
                                      FieldMode mode = FieldMode::Rational);

/// M^k*Mat contained in the full tangent space M*J(M) + O{C,R}, decided at
/// truncation degree k+1 (one-degree Nakayama margin).
DeterminacyReport check_tangent_contains_power(const GermPresentation& g, int k,
                                               FieldMode mode = FieldMode::Rational);

/// M^k contained in the scalar ideal I_G(M), via the same jet machinery
/// with 1x1 matrices.
DeterminacyReport check_IG_power(const GermPresentation& g, int k,
                                 FieldMode mode = FieldMode::Rational);

/// First k <= kmax with check_IG_power contained; never asserts a
/// negative, reports inconclusive-at-bound instead.
DeterminacyReport isolated_singularity_check(const GermPresentation& g, int kmax,
                                             FieldMode mode = FieldMode::Rational);

/// Minimal k <= kmax passing check_infinitesimal ("sufficient bound").
DeterminacyReport determinacy_degree(const GermPresentation& g, int kmax,
                                     FieldMode mode = FieldMode::Rational);

struct TjurinaReport {
  std::vector<std::pair<long, long>> dims;  // (truncation degree, quotient dim)
  std::optional<long> value;                // stabilized dimension
  long certificate_degree = -1;
  bool diverged = false;
  bool resource_limited = false;
};

/// Quotient dimension of Mat/(J(M) + Im(g)) at increasing truncation
/// degrees; stabilizes once two consecutive degrees agree and the
/// maximal-ideal power containment certificate holds.
TjurinaReport tjurina_number(const GermPresentation& g, int dmax,
                             FieldMode mode = FieldMode::Rational);

inline constexpr int kDefaultMaxK = 15;
inline constexpr int kDefaultMaxDegree = 12;

}  // namespace matgerm
