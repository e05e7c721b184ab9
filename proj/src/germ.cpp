#include "matgerm/germ.hpp"

#include <algorithm>

namespace matgerm {

void GermPresentation::validate() const {
  if (m.rows() < 1 || m.cols() != m.rows() + 1)
    throw std::invalid_argument("germ matrix must be n x (n+1) with n >= 1");
  if (m.varcount() != int(varnames.size()))
    throw std::invalid_argument("varname list does not match entry varcount");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j).constant_term() != 0)
        throw std::invalid_argument("germ entries must have zero constant term");
}

MinorVector maximal_minors(const GermPresentation& g) {
  MinorVector f;
  f.reserve(g.p());
  for (int j = 0; j < g.p(); ++j) f.push_back(det(g.m.without(-1, j)));
  return f;
}

Polynomial cofactor(const GermPresentation& g, int j, int k, int s) {
  const int n = g.n();
  if (j < 0 || j >= g.p() || s < 0 || s >= g.p() || k < 0 || k >= n)
    throw std::out_of_range("cofactor index out of range");
  if (s == j) throw std::invalid_argument("cofactor: entry column equals removed column");
  if (n == 1) return Polynomial::constant(g.m.varcount(), 1);
  int s_local = s - (s > j ? 1 : 0);
  PolyMatrix mj = g.m.without(-1, j);
  Polynomial minor = det(mj.without(k, s_local));
  return ((k + s_local) % 2 == 0) ? minor : -minor;
}

Polynomial nested_cofactor(const GermPresentation& g, int j, int k, int i, int s, int u) {
  const int n = g.n();
  if (j < 0 || j >= g.p() || i < 0 || i >= g.p() || u < 0 || u >= g.p() || k < 0 ||
      k >= n || s < 0 || s >= n)
    throw std::out_of_range("nested cofactor index out of range");
  if (n == 1) return Polynomial::constant(g.m.varcount(), 1);
  if (i == j || u == j || u == i || s == k)
    throw std::invalid_argument("nested cofactor: invalid index combination");
  int i_local = i - (i > j ? 1 : 0);
  PolyMatrix mjk = g.m.without(-1, j).without(k, i_local);
  int s_local = s - (s > k ? 1 : 0);
  int u_local = u - (u > j ? 1 : 0) - (u > i ? 1 : 0);
  Polynomial minor = det(mjk.without(s_local, u_local));
  return ((s_local + u_local) % 2 == 0) ? minor : -minor;
}

PolyMatrix jacobian(const MinorVector& minors, int varcount) {
  PolyMatrix j(int(minors.size()), varcount, varcount);
  for (int q = 0; q < int(minors.size()); ++q)
    for (int gamma = 0; gamma < varcount; ++gamma)
      j.at(q, gamma) = minors[q].derivative(gamma);
  return j;
}

JacobianMinor jacobian_minor(const MinorVector& minors, int q, int s, int gamma, int nu) {
  if (q == s) throw std::invalid_argument("jacobian_minor: q == s");
  if (gamma == nu) throw std::invalid_argument("jacobian_minor: gamma == nu");
  const Polynomial& fq = minors.at(q);
  const Polynomial& fs = minors.at(s);
  Polynomial value =
      fq.derivative(gamma) * fs.derivative(nu) - fq.derivative(nu) * fs.derivative(gamma);
  return JacobianMinor{q, s, gamma, nu, std::move(value)};
}

IdealGenerators ideal_IG(const GermPresentation& g) {
  IdealGenerators ig;
  ig.label = "I_G(M)";
  auto push_unique = [&ig](const Polynomial& p) {
    if (p.is_zero()) return;
    if (std::find(ig.gens.begin(), ig.gens.end(), p) == ig.gens.end()) ig.gens.push_back(p);
  };
  MinorVector f = maximal_minors(g);
  for (const auto& fi : f) push_unique(fi);
  const int r = g.r();
  for (int q = 0; q < g.p(); ++q)
    for (int s = q + 1; s < g.p(); ++s)
      for (int gamma = 0; gamma < r; ++gamma)
        for (int nu = gamma + 1; nu < r; ++nu)
          push_unique(jacobian_minor(f, q, s, gamma, nu).value);
  return ig;
}

}  // namespace matgerm
