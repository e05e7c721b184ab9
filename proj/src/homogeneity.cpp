#include "matgerm/homogeneity.hpp"

#include <numeric>
#include <sstream>

namespace matgerm {

const char* to_cstring(Triviality t) {
  switch (t) {
    case Triviality::Trivial: return "trivial";
    case Triviality::TrivialSmallT: return "trivial-small-t";
    default: return "no-conclusion";
  }
}

namespace {

bool euler_relation_holds(const Polynomial& f, const WeightSystem& a, long degree) {
  Polynomial lhs(f.varcount());
  for (int i = 0; i < f.varcount(); ++i)
    lhs += Polynomial::variable(f.varcount(), i) * f.derivative(i) * Rat(a[i]);
  return lhs == f * Rat(degree);
}

}  // namespace

HomogeneityResult check_weighted_homogeneous(const GermPresentation& g,
                                             const WeightSystem& a) {
  g.validate();
  HomogeneityResult res;
  if (int(a.size()) != g.r()) {
    res.error = "weight vector length differs from variable count";
    return res;
  }
  const int n = g.n(), p = g.p();
  HomogeneityType t;
  t.a = a;
  t.D.assign(n, std::vector<long>(p, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) {
      const Polynomial& e = g.m.at(i, j);
      std::ostringstream where;
      where << "entry (" << i + 1 << "," << j + 1 << ")";
      if (e.is_zero()) {
        res.error = where.str() + " is zero (infinite filtration)";
        return res;
      }
      if (!e.is_weighted_homogeneous(a)) {
        res.error = where.str() + " is not weighted homogeneous";
        return res;
      }
      t.D[i][j] = *e.filtration(a);
    }
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k)
          if (t.D[i][j] - t.D[i][k] != t.D[l][j] - t.D[l][k]) {
            std::ostringstream os;
            os << "rectangle relation fails: d_" << i + 1 << j + 1 << " - d_" << i + 1
               << k + 1 << " != d_" << l + 1 << j + 1 << " - d_" << l + 1 << k + 1;
            res.error = os.str();
            return res;
          }
  MinorVector f = maximal_minors(g);
  t.D_u.assign(p, 0);
  for (int u = 0; u < p; ++u) {
    std::ostringstream where;
    where << "minor f_" << u + 1;
    if (f[u].is_zero()) {
      res.error = where.str() + " vanishes identically";
      return res;
    }
    if (!f[u].is_weighted_homogeneous(a)) {
      res.error = where.str() + " is not weighted homogeneous";
      return res;
    }
    t.D_u[u] = *f[u].filtration(a);
    if (!euler_relation_holds(f[u], a, t.D_u[u])) {
      res.error = where.str() + " fails the Euler relation";
      return res;
    }
  }
  t.d_max = 0;
  for (const auto& row : t.D)
    for (long d : row) t.d_max = std::max(t.d_max, d);
  res.ok = true;
  res.type = std::move(t);
  return res;
}

ControlFunctionSpec control_spec(const HomogeneityType& h, const GermPresentation& g) {
  ControlFunctionSpec s;
  s.k1 = 1;
  for (long d : h.D_u) s.k1 = std::lcm(s.k1, d);
  for (long d : h.D_u) s.beta.push_back(s.k1 / d);

  MinorVector f = maximal_minors(g);
  const int p = g.p(), r = g.r();
  for (int q = 0; q < p; ++q)
    for (int sidx = q + 1; sidx < p; ++sidx)
      for (int gamma = 0; gamma < r; ++gamma)
        for (int nu = gamma + 1; nu < r; ++nu) {
          if (jacobian_minor(f, q, sidx, gamma, nu).value.is_zero()) continue;
          DeltaDegree dd;
          dd.q = q;
          dd.s = sidx;
          dd.gamma = gamma;
          dd.nu = nu;
          dd.degree = h.D_u[q] + h.D_u[sidx] - h.a[gamma] - h.a[nu];
          s.delta_degrees.push_back(dd);
        }
  if (s.delta_degrees.empty()) {
    s.degenerate = true;
    s.degenerate_reason = "all jacobian 2x2 minors vanish identically";
    return s;
  }
  for (const auto& dd : s.delta_degrees)
    if (dd.degree <= 0) {
      s.degenerate = true;
      std::ostringstream os;
      os << "jacobian minor (" << dd.q + 1 << "," << dd.s + 1 << ";" << dd.gamma + 1 << ","
         << dd.nu + 1 << ") has non-positive degree " << dd.degree
         << " (a unit up to higher order)";
      s.degenerate_reason = os.str();
      return s;
    }
  s.k2 = 1;
  for (const auto& dd : s.delta_degrees) s.k2 = std::lcm(s.k2, dd.degree);
  for (const auto& dd : s.delta_degrees) s.alpha.push_back(s.k2 / dd.degree);
  s.K = std::lcm(s.k1, s.k2);
  s.c1 = s.K / s.k2;
  s.c2 = s.K / s.k1;
  return s;
}

TrivialityVerdict classify_deformation(const GermPresentation& g, const PolyMatrix& theta,
                                       const WeightSystem& a, int kmax, FieldMode mode) {
  if (!theta.same_shape(g.m))
    throw std::invalid_argument("deformation shape differs from the germ matrix");
  HomogeneityResult h = check_weighted_homogeneous(g, a);
  if (!h.ok) throw std::invalid_argument("germ not weighted homogeneous: " + h.error);

  TrivialityVerdict v;
  v.type = h.type;
  std::optional<long> minfil;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.p(); ++j) {
      std::optional<long> fil = theta.at(i, j).filtration(a);
      v.entry_filtrations.emplace_back(i, j, fil);
      if (fil && (!minfil || *fil < *minfil)) minfil = fil;
    }
  v.min_filtration = minfil;
  if (!minfil || *minfil >= h.type.d_max + 1)
    v.verdict = Triviality::Trivial;
  else if (*minfil == h.type.d_max)
    v.verdict = Triviality::TrivialSmallT;
  else
    v.verdict = Triviality::NoConclusion;
  v.precondition = isolated_singularity_check(g, kmax, mode);
  return v;
}

FiltrationCertificate filtration_certificate(const GermPresentation& g,
                                             const PolyMatrix& theta,
                                             const WeightSystem& a) {
  if (!theta.same_shape(g.m))
    throw std::invalid_argument("deformation shape differs from the germ matrix");
  HomogeneityResult h = check_weighted_homogeneous(g, a);
  if (!h.ok) throw std::invalid_argument("germ not weighted homogeneous: " + h.error);

  FiltrationCertificate cert;
  cert.spec = control_spec(h.type, g);
  const int n = g.n(), p = g.p();

  std::optional<long> minfil;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) {
      auto fil = theta.at(i, j).filtration(a);
      if (fil && (!minfil || *fil < *minfil)) minfil = fil;
    }
  cert.bounds_asserted = !minfil || *minfil >= h.type.d_max + 1;

  cert.identities_ok = true;
  auto record_bounds = [&](const TangentCombination& c, long formal, long threshold,
                           const std::string& tag) {
    auto add = [&](const Polynomial& coeff, const std::string& family, int idx) {
      auto fil = coeff.filtration(a);
      if (!fil) return;  // zero coefficient contributes nothing
      BoundRecord b;
      std::ostringstream os;
      os << tag << " " << family << "[" << idx << "]";
      b.label = os.str();
      b.formal_degree = formal;
      b.coefficient_filtration = *fil;
      b.total = formal + *fil;
      b.threshold = threshold;
      b.meets = b.total >= threshold;
      cert.bounds.push_back(b);
    };
    for (std::size_t i = 0; i < c.jcoeffs.size(); ++i) add(c.jcoeffs[i], "dM", int(i));
    for (std::size_t i = 0; i < c.ccoeffs.size(); ++i) add(c.ccoeffs[i], "C", int(i));
    for (std::size_t i = 0; i < c.rcoeffs.size(); ++i) add(c.rcoeffs[i], "R", int(i));
  };

  // H-route: f_j * Theta as a column-generator combination, per minor.
  for (int j = 0; j < p; ++j) {
    TangentCombination comb = TangentCombination::zero(g);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < p; ++l) {
        const Polynomial& th = theta.at(k, l);
        if (th.is_zero()) continue;
        comb += witness_minor_unit(g, j, k, l).scaled(th);
      }
    if (!verify_combination(comb, g)) cert.identities_ok = false;
    std::ostringstream tag;
    tag << "H f_" << j + 1;
    record_bounds(comb, 2 * cert.spec.k1 - h.type.D_u[j], 2 * cert.spec.k1 + 1, tag.str());
    cert.h_route.push_back(std::move(comb));
  }

  // R-route: Delta * Theta, one certificate per nonzero jacobian minor.
  if (!cert.spec.degenerate) {
    for (const auto& dd : cert.spec.delta_degrees) {
      TangentCombination comb = TangentCombination::zero(g);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < p; ++l) {
          const Polynomial& th = theta.at(k, l);
          if (th.is_zero()) continue;
          comb += witness_jacobian_minor(g, dd.q, dd.s, dd.gamma, dd.nu, k, l).scaled(th);
        }
      if (!verify_combination(comb, g)) cert.identities_ok = false;
      std::ostringstream tag;
      tag << "R Delta(" << dd.q + 1 << "," << dd.s + 1 << ";" << dd.gamma + 1 << ","
          << dd.nu + 1 << ")";
      record_bounds(comb, 2 * cert.spec.k2 - dd.degree, 2 * cert.spec.k2 + 1, tag.str());
      cert.r_route.push_back(std::move(comb));
    }
  }

  cert.all_bounds_met = true;
  for (const auto& b : cert.bounds)
    if (!b.meets) cert.all_bounds_met = false;
  return cert;
}

}  // namespace matgerm
