#pragma once

#include <string>
#include <vector>

#include "matgerm/matrix.hpp"

namespace matgerm {

/// An n x (n+1) matrix of polynomials with entries in the maximal ideal
/// (zero constant terms), together with the ambient variable names.
struct GermPresentation {
  PolyMatrix m;
  std::vector<std::string> varnames;

  int n() const { return m.rows(); }
  int p() const { return m.cols(); }
  int r() const { return int(varnames.size()); }

  /// Throws std::invalid_argument on shape or maximal-ideal violations.
  void validate() const;
};

/// Minors indexed by the removed column: minors[j] = det(M with column j
/// removed). No alternating external sign.
using MinorVector = std::vector<Polynomial>;

MinorVector maximal_minors(const GermPresentation& g);

/// cof^j(m_ks): signed cofactor of entry (k, s) inside the square matrix
/// obtained by deleting column j. Signs use positions local to that
/// submatrix. For n = 1 the value is 1. All indices 0-based.
Polynomial cofactor(const GermPresentation& g, int j, int k, int s);

/// cof^j_{ki}(m_su): cofactor of entry (s, u) inside the matrix obtained
/// by deleting column j, then row k and column i. By convention the value
/// is 1 when n = 1. All indices 0-based.
Polynomial nested_cofactor(const GermPresentation& g, int j, int k, int i, int s, int u);

/// (n+1) x r matrix with entry (q, gamma) = d minors[q] / d x_gamma.
PolyMatrix jacobian(const MinorVector& minors, int varcount);

/// A 2x2 minor of the jacobian of the minor vector:
/// value = df_q/dx_gamma * df_s/dx_nu - df_q/dx_nu * df_s/dx_gamma.
struct JacobianMinor {
  int q, s;       // minor indices, q != s
  int gamma, nu;  // variable indices, gamma != nu
  Polynomial value;
};

JacobianMinor jacobian_minor(const MinorVector& minors, int q, int s, int gamma, int nu);

struct IdealGenerators {
  std::string label;
  std::vector<Polynomial> gens;  // deduplicated, zero-free
};

/// I_G(M): all maximal minors plus all 2x2 jacobian minors over ordered
/// pairs q < s, gamma < nu (zero generators and duplicates dropped).
IdealGenerators ideal_IG(const GermPresentation& g);

}  // namespace matgerm
