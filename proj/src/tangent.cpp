#include "matgerm/tangent.hpp"

namespace matgerm {

PolyMatrix unit_matrix(int rows, int cols, int k, int l, int varcount) {
  PolyMatrix e(rows, cols, varcount);
  e.at(k, l) = Polynomial::constant(varcount, 1);
  return e;
}

PolyMatrix g_map(const PolyMatrix& A, const PolyMatrix& B, const PolyMatrix& M) {
  if (A.rows() != A.cols() || A.rows() != M.cols())
    throw std::invalid_argument("g_map: A must be p x p");
  if (B.rows() != B.cols() || B.rows() != M.rows())
    throw std::invalid_argument("g_map: B must be n x n");
  return B * M + M * A;
}

GeneratorSet GeneratorSet::build(const GermPresentation& g) {
  GeneratorSet s;
  s.n = g.n();
  s.p = g.p();
  s.r = g.r();
  const int vc = g.m.varcount();
  for (int i = 0; i < s.r; ++i) {
    PolyMatrix d(s.n, s.p, vc);
    for (int a = 0; a < s.n; ++a)
      for (int b = 0; b < s.p; ++b) d.at(a, b) = g.m.at(a, b).derivative(i);
    s.jgens.push_back(std::move(d));
  }
  for (int i = 0; i < s.p; ++i)
    for (int j = 0; j < s.p; ++j) {
      PolyMatrix c(s.n, s.p, vc);
      for (int a = 0; a < s.n; ++a) c.at(a, i) = g.m.at(a, j);
      s.cgens.push_back(std::move(c));
    }
  for (int l = 0; l < s.n; ++l)
    for (int k = 0; k < s.n; ++k) {
      PolyMatrix rm(s.n, s.p, vc);
      for (int b = 0; b < s.p; ++b) rm.at(l, b) = g.m.at(k, b);
      s.rgens.push_back(std::move(rm));
    }
  return s;
}

TangentCombination TangentCombination::zero(const GermPresentation& g) {
  TangentCombination c;
  const int vc = g.m.varcount();
  c.target = PolyMatrix(g.n(), g.p(), vc);
  c.jcoeffs.assign(g.r(), Polynomial(vc));
  c.ccoeffs.assign(std::size_t(g.p()) * g.p(), Polynomial(vc));
  c.rcoeffs.assign(std::size_t(g.n()) * g.n(), Polynomial(vc));
  return c;
}

TangentCombination& TangentCombination::operator+=(const TangentCombination& o) {
  target = target + o.target;
  for (std::size_t i = 0; i < jcoeffs.size(); ++i) jcoeffs[i] += o.jcoeffs[i];
  for (std::size_t i = 0; i < ccoeffs.size(); ++i) ccoeffs[i] += o.ccoeffs[i];
  for (std::size_t i = 0; i < rcoeffs.size(); ++i) rcoeffs[i] += o.rcoeffs[i];
  return *this;
}

TangentCombination TangentCombination::scaled(const Polynomial& f) const {
  TangentCombination c(*this);
  c.target = c.target.scaled(f);
  for (auto& q : c.jcoeffs) q = q * f;
  for (auto& q : c.ccoeffs) q = q * f;
  for (auto& q : c.rcoeffs) q = q * f;
  return c;
}

TangentCombination TangentCombination::scaled(const Rat& k) const {
  TangentCombination c(*this);
  c.target = c.target.scaled(k);
  for (auto& q : c.jcoeffs) q = q * k;
  for (auto& q : c.ccoeffs) q = q * k;
  for (auto& q : c.rcoeffs) q = q * k;
  return c;
}

bool verify_combination(const TangentCombination& c, const GermPresentation& g) {
  GeneratorSet s = GeneratorSet::build(g);
  if (int(c.jcoeffs.size()) != s.r || int(c.ccoeffs.size()) != s.p * s.p ||
      int(c.rcoeffs.size()) != s.n * s.n || !c.target.same_shape(s.jgens.empty()
          ? PolyMatrix(s.n, s.p, g.m.varcount()) : s.jgens[0]))
    throw std::invalid_argument("combination dimensions inconsistent with germ");
  PolyMatrix sum(s.n, s.p, g.m.varcount());
  for (int i = 0; i < s.r; ++i)
    if (!c.jcoeffs[i].is_zero()) sum = sum + s.jgens[i].scaled(c.jcoeffs[i]);
  for (int i = 0; i < s.p * s.p; ++i)
    if (!c.ccoeffs[i].is_zero()) sum = sum + s.cgens[i].scaled(c.ccoeffs[i]);
  for (int i = 0; i < s.n * s.n; ++i)
    if (!c.rcoeffs[i].is_zero()) sum = sum + s.rgens[i].scaled(c.rcoeffs[i]);
  return sum == c.target;
}

TangentCombination witness_minor_unit(const GermPresentation& g, int j, int k, int l) {
  const int n = g.n(), p = g.p();
  if (j < 0 || j >= p || l < 0 || l >= p || k < 0 || k >= n)
    throw std::out_of_range("witness_minor_unit index out of range");
  TangentCombination c = TangentCombination::zero(g);
  for (int s = 0; s < p; ++s) {
    if (s == j) continue;
    c.ccoeffs[std::size_t(l) * p + s] += cofactor(g, j, k, s);
  }
  Polynomial fj = det(g.m.without(-1, j));
  c.target = unit_matrix(n, p, k, l, g.m.varcount()).scaled(fj);
  return c;
}

namespace {

// Core of the gradient-pair witness, valid for l < j.
TangentCombination gradient_pair_core(const GermPresentation& g, int j, int l, int gamma,
                                      int k) {
  const int n = g.n(), p = g.p(), vc = g.m.varcount();
  TangentCombination c = TangentCombination::zero(g);

  // dM/dx_gamma carries cof^j(m_kl)
  c.jcoeffs[gamma] += cofactor(g, j, k, l);

  // columns of index l: derivatives of the k-th row cofactors in M^j
  for (int i = 0; i < p; ++i) {
    if (i == j) continue;
    c.ccoeffs[std::size_t(l) * p + i] += cofactor(g, j, k, i).derivative(gamma);
  }
  // columns of index j, with the antisymmetry sign
  const bool flip = ((l - j + 1) % 2) != 0;
  for (int i = 0; i < p; ++i) {
    if (i == l) continue;
    Polynomial d = cofactor(g, l, k, i).derivative(gamma);
    c.ccoeffs[std::size_t(j) * p + i] += flip ? -d : d;
  }

  // rows: nested-cofactor corrections. Parities of the printed exponents
  // are unchanged by the 0-based shift (both indices move together).
  for (int i = 0; i < p; ++i) {
    if (i == j || i == l) continue;
    Polynomial dm = g.m.at(k, i).derivative(gamma);
    if (dm.is_zero()) continue;
    // row k terms: sign k+i for i<j, k+i-1 for i>j
    long alpha = (i < j) ? (k + i) : (k + i - 1);
    for (int u = 0; u < n; ++u) {
      if (u == k) continue;
      Polynomial t = dm * nested_cofactor(g, j, k, i, u, l);
      c.rcoeffs[std::size_t(k) * n + u] += (alpha % 2 == 0) ? t : -t;
    }
  }
  for (int q = 0; q < n; ++q) {
    if (q == k) continue;
    for (int i = 0; i < p; ++i) {
      if (i == j || i == l) continue;
      Polynomial dm = g.m.at(q, i).derivative(gamma);
      if (dm.is_zero()) continue;
      for (int u = 0; u < n; ++u) {
        if (u == k) continue;
        // sign u+i+1 for i<j, u+i for i>j (column-expansion parity)
        long mu = (i < j) ? (u + i + 1) : (u + i);
        Polynomial t = dm * nested_cofactor(g, j, u, i, k, l);
        c.rcoeffs[std::size_t(q) * n + u] += (mu % 2 == 0) ? t : -t;
      }
    }
  }

  MinorVector f = maximal_minors(g);
  PolyMatrix target = unit_matrix(n, p, k, l, vc).scaled(f[j].derivative(gamma));
  PolyMatrix second = unit_matrix(n, p, k, j, vc).scaled(f[l].derivative(gamma));
  c.target = flip ? (target - second) : (target + second);
  return c;
}

}  // namespace

TangentCombination witness_gradient_pair(const GermPresentation& g, int j, int l, int gamma,
                                         int k) {
  const int n = g.n(), p = g.p(), r = g.r();
  if (j == l) throw std::invalid_argument("witness_gradient_pair: j == l");
  if (j < 0 || j >= p || l < 0 || l >= p || k < 0 || k >= n || gamma < 0 || gamma >= r)
    throw std::out_of_range("witness_gradient_pair index out of range");
  if (l < j) return gradient_pair_core(g, j, l, gamma, k);
  // G_jl = (-1)^(l-j+1) G_lj; scaling flips the stored target consistently
  TangentCombination c = gradient_pair_core(g, l, j, gamma, k);
  return ((l - j + 1) % 2 == 0) ? c : c.scaled(Rat(-1));
}

TangentCombination witness_jacobian_minor(const GermPresentation& g, int q, int s, int gamma,
                                          int nu, int k, int l) {
  const int n = g.n(), p = g.p(), r = g.r();
  if (q == s) throw std::invalid_argument("witness_jacobian_minor: q == s");
  if (gamma == nu) throw std::invalid_argument("witness_jacobian_minor: gamma == nu");
  if (q < 0 || q >= p || s < 0 || s >= p || l < 0 || l >= p || k < 0 || k >= n ||
      gamma < 0 || gamma >= r || nu < 0 || nu >= r)
    throw std::out_of_range("witness_jacobian_minor index out of range");

  MinorVector f = maximal_minors(g);
  auto df = [&](int idx, int var) { return f[idx].derivative(var); };

  TangentCombination c = TangentCombination::zero(g);
  if (q == l) {
    // two-term split: fl_gamma * G^nu_sl - fl_nu * G^gamma_sl
    c += witness_gradient_pair(g, s, l, nu, k).scaled(df(l, gamma));
    c += witness_gradient_pair(g, s, l, gamma, k).scaled(-df(l, nu));
  } else if (s == l) {
    // Delta^(q,l) = -Delta^(l,q); reuse the q == l split negated
    c += witness_gradient_pair(g, q, l, nu, k).scaled(-df(l, gamma));
    c += witness_gradient_pair(g, q, l, gamma, k).scaled(df(l, nu));
  } else {
    // three-term split for q, s != l (negated so the target carries +Delta)
    Rat sgn = ((l - q) % 2 == 0) ? Rat(-1) : Rat(1);
    c += witness_gradient_pair(g, s, q, gamma, k).scaled(df(l, nu) * sgn);
    c += witness_gradient_pair(g, q, l, nu, k).scaled(-df(s, gamma));
    c += witness_gradient_pair(g, s, l, nu, k).scaled(df(q, gamma));
  }
  // by construction the accumulated target equals Delta * E_kl; restate it
  c.target = unit_matrix(n, p, k, l, g.m.varcount())
                 .scaled(jacobian_minor(f, q, s, gamma, nu).value);
  return c;
}

}  // namespace matgerm
