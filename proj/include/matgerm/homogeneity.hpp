#pragma once

#include <optional>
#include <string>

#include "matgerm/determinacy.hpp"
#include "matgerm/germ.hpp"
#include "matgerm/tangent.hpp"

namespace matgerm {

/// Weighted-homogeneity data for a germ: entry degree matrix D, minor
/// degrees D_u and the maximal entry degree d_max.
struct HomogeneityType {
  WeightSystem a;
  std::vector<std::vector<long>> D;  // n x (n+1) entry degrees
  std::vector<long> D_u;             // n+1 minor degrees
  long d_max = 0;
};

struct HomogeneityResult {
  bool ok = false;
  HomogeneityType type;
  std::string error;  // names the violated entry or relation
};

/// Accepts iff every entry is nonzero, weighted homogeneous of finite
/// degree, the rectangle relations d_ij - d_ik = d_lj - d_lk hold, and
/// every maximal minor is weighted homogeneous (Euler relation checked
/// exactly).
HomogeneityResult check_weighted_homogeneous(const GermPresentation& g,
                                             const WeightSystem& a);

struct DeltaDegree {
  int q = 0, s = 0, gamma = 0, nu = 0;
  long degree = 0;  // D_q + D_s - a_gamma - a_nu
};

/// Exponent bookkeeping for the formal control functions: k1 = lcm(D_u),
/// beta_u = k1/D_u, k2 = lcm of the nonzero-Delta degrees with
/// alpha = k2/degree, K = lcm(k1, k2), c1 = K/k2, c2 = K/k1.
struct ControlFunctionSpec {
  long k1 = 0;
  std::vector<long> beta;
  std::vector<DeltaDegree> delta_degrees;  // nonzero Deltas only
  std::vector<long> alpha;                 // parallel to delta_degrees
  long k2 = 0;
  long K = 0;
  long c1 = 0, c2 = 0;
  bool degenerate = false;
  std::string degenerate_reason;
};

ControlFunctionSpec control_spec(const HomogeneityType& h, const GermPresentation& g);

enum class Triviality { Trivial, TrivialSmallT, NoConclusion };

const char* to_cstring(Triviality t);

/// Classification of the deformation M + t*Theta by entry filtrations
/// against d_max, plus the algebraic stand-in for the analytic
/// precondition (isolated-singularity certificate).
struct TrivialityVerdict {
  HomogeneityType type;
  /// (row, col, filtration); nullopt filtration encodes +infinity.
  std::vector<std::tuple<int, int, std::optional<long>>> entry_filtrations;
  std::optional<long> min_filtration;  // nullopt when Theta = 0
  Triviality verdict = Triviality::NoConclusion;
  DeterminacyReport precondition;  // isolated_singularity_check result
};

TrivialityVerdict classify_deformation(const GermPresentation& g, const PolyMatrix& theta,
                                       const WeightSystem& a, int kmax,
                                       FieldMode mode = FieldMode::Rational);

struct BoundRecord {
  std::string label;          // which coefficient family the bound covers
  long formal_degree = 0;     // degree of the formal conjugate-power factor
  long coefficient_filtration = 0;
  long total = 0;             // formal_degree + coefficient_filtration
  long threshold = 0;         // 2*k1 + 1 or 2*k2 + 1
  bool meets = false;
};

/// Exact decomposition identities for f_j * Theta (one certificate per
/// minor) and Delta * Theta (one per nonzero jacobian minor), with formal
/// filtration bounds for their coefficients.
struct FiltrationCertificate {
  bool identities_ok = false;
  std::vector<TangentCombination> h_route;  // indexed by minor j
  std::vector<TangentCombination> r_route;  // parallel to spec.delta_degrees
  ControlFunctionSpec spec;
  std::vector<BoundRecord> bounds;
  bool bounds_asserted = false;  // only when min fil(Theta) >= d_max + 1
  bool all_bounds_met = false;
};

FiltrationCertificate filtration_certificate(const GermPresentation& g,
                                             const PolyMatrix& theta,
                                             const WeightSystem& a);

}  // namespace matgerm
