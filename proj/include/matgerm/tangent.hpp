#pragma once

#include "matgerm/germ.hpp"

namespace matgerm {

/// E_kl: single unit entry at (k, l), 0-based.
PolyMatrix unit_matrix(int rows, int cols, int k, int l, int varcount);

/// g(A, B) = B*M + M*A with A of shape p x p and B of shape n x n.
PolyMatrix g_map(const PolyMatrix& A, const PolyMatrix& B, const PolyMatrix& M);

/// The three generator families of the tangent space:
///   jgens[i]          = dM/dx_i                       (r matrices)
///   cgens[i*p + j]    = C_ij(M): column i of the result is column j of M
///   rgens[l*n + k]    = R_lk(M): row l of the result is row k of M
struct GeneratorSet {
  int n = 0, p = 0, r = 0;
  std::vector<PolyMatrix> jgens, cgens, rgens;

  static GeneratorSet build(const GermPresentation& g);

  int cindex(int i, int j) const { return i * p + j; }
  int rindex(int l, int k) const { return l * n + k; }
};

/// A checkable certificate: target = sum jcoeffs[i]*dM/dx_i
///                                 + sum ccoeffs[ij]*C_ij(M)
///                                 + sum rcoeffs[lk]*R_lk(M), exactly.
/// Coefficients are stored against GeneratorSet's canonical indexing.
struct TangentCombination {
  PolyMatrix target;
  std::vector<Polynomial> jcoeffs;  // size r
  std::vector<Polynomial> ccoeffs;  // size (n+1)^2
  std::vector<Polynomial> rcoeffs;  // size n^2

  static TangentCombination zero(const GermPresentation& g);

  TangentCombination& operator+=(const TangentCombination& o);
  TangentCombination scaled(const Polynomial& f) const;
  TangentCombination scaled(const Rat& c) const;
};

/// True iff the defining equality of the combination holds exactly.
bool verify_combination(const TangentCombination& c, const GermPresentation& g);

/// Certificate for f_j * E_kl built from cofactors of the k-th row:
/// column coefficients C_ls = cof^j(m_ks) for s != j.
TangentCombination witness_minor_unit(const GermPresentation& g, int j, int k, int l);

/// Certificate for df_j/dx_gamma * E_kl + (-1)^(l-j+1) df_l/dx_gamma * E_kj
/// (j != l), assembled from cofactors and nested cofactors.
TangentCombination witness_gradient_pair(const GermPresentation& g, int j, int l, int gamma,
                                         int k);

/// Certificate for Delta^(q,s)_(gamma,nu) * E_kl, assembled as a
/// polynomial combination of gradient-pair witnesses.
TangentCombination witness_jacobian_minor(const GermPresentation& g, int q, int s, int gamma,
                                          int nu, int k, int l);

}  // namespace matgerm
