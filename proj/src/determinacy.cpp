#include "matgerm/determinacy.hpp"

#include <sstream>

#include "matgerm/tangent.hpp"

namespace matgerm {

const char* to_cstring(Verdict v) {
  switch (v) {
    case Verdict::Contained: return "contained";
    case Verdict::NotContained: return "not-contained";
    default: return "inconclusive";
  }
}

namespace {

std::string entry_witness(const Monomial& m, int i, int j, bool scalar,
                          const std::vector<std::string>& varnames) {
  std::ostringstream os;
  os << to_string(Polynomial::monomial(m, 1), varnames);
  if (!scalar) os << " * E_(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

// Generator families for the three containment checks. min_mult_degree
// realizes the maximal-ideal powers multiplying each family.
std::vector<GenSpec> infinitesimal_gens(const GermPresentation& g) {
  GeneratorSet s = GeneratorSet::build(g);
  std::vector<GenSpec> gens;
  for (auto& m : s.jgens) gens.push_back({std::move(m), 2});
  for (auto& m : s.cgens) gens.push_back({std::move(m), 1});
  for (auto& m : s.rgens) gens.push_back({std::move(m), 1});
  return gens;
}

std::vector<GenSpec> tangent_gens(const GermPresentation& g) {
  GeneratorSet s = GeneratorSet::build(g);
  std::vector<GenSpec> gens;
  for (auto& m : s.jgens) gens.push_back({std::move(m), 1});
  for (auto& m : s.cgens) gens.push_back({std::move(m), 0});
  for (auto& m : s.rgens) gens.push_back({std::move(m), 0});
  return gens;
}

std::vector<GenSpec> ig_gens(const GermPresentation& g) {
  IdealGenerators ig = ideal_IG(g);
  std::vector<GenSpec> gens;
  for (const auto& f : ig.gens) {
    PolyMatrix m(1, 1, g.m.varcount());
    m.at(0, 0) = f;
    gens.push_back({std::move(m), 0});
  }
  return gens;
}

// All monomial * unit-entry targets of exact total degree `deg` within the
// jet index's ambient shape.
std::vector<std::pair<Monomial, std::pair<int, int>>> targets_of_degree(
    const JetIndex& index, long deg) {
  std::vector<std::pair<Monomial, std::pair<int, int>>> out;
  for (const auto& m : index.monomials) {
    if (m.total_degree() != deg) continue;
    for (int i = 0; i < index.n; ++i)
      for (int j = 0; j < index.p; ++j) out.push_back({m, {i, j}});
  }
  return out;
}

PolyMatrix target_matrix(const JetIndex& index, const Monomial& m, int i, int j) {
  PolyMatrix t(index.n, index.p, index.r);
  t.at(i, j) = Polynomial::monomial(m, 1);
  return t;
}

// Full rational decision for "M^deg * (ambient shape) inside the span",
// with the F_p pre-screen folded in when requested. Verdicts reported to
// the caller are always established over the rationals.
DeterminacyReport probe(const std::vector<GenSpec>& gens, int r, int n, int p,
                        const std::vector<std::string>& varnames, long target_degree,
                        long trunc_degree, FieldMode mode) {
  DeterminacyReport rep;
  rep.truncation_degree = trunc_degree;
  JetIndex index = JetIndex::build(r, n, p, trunc_degree);
  auto targets = targets_of_degree(index, target_degree);
  const bool scalar = (n == 1 && p == 1);

  if (mode == FieldMode::PrimeScreen) {
    rep.fp_used = true;
    FpJetSubspace fs = FpJetSubspace::span_from_generators(gens, index);
    if (!fs.valid()) {
      rep.fp_escalated = true;
      rep.note = "prime divides a denominator; escalated to exact arithmetic";
    } else {
      rep.rank_fp = fs.rank();
    }
  }

  JetSubspace qs = JetSubspace::span_from_generators(gens, index);
  rep.rank_q = qs.rank();
  if (rep.fp_used && !rep.fp_escalated) rep.fp_agreed = (rep.rank_fp == rep.rank_q);

  for (const auto& [m, ij] : targets) {
    PolyMatrix t = target_matrix(index, m, ij.first, ij.second);
    if (!qs.membership(t).contained) {
      rep.verdict = Verdict::NotContained;
      rep.witness = entry_witness(m, ij.first, ij.second, scalar, varnames);
      return rep;
    }
  }
  rep.verdict = Verdict::Contained;
  return rep;
}

// F_p-only answer used to skip hopeless scan values cheaply. nullopt means
// the prime was unusable and the caller must fall back to exact arithmetic.
std::optional<bool> fp_probe(const std::vector<GenSpec>& gens, int r, int n, int p,
                             long target_degree, long trunc_degree) {
  JetIndex index = JetIndex::build(r, n, p, trunc_degree);
  FpJetSubspace fs = FpJetSubspace::span_from_generators(gens, index);
  if (!fs.valid()) return std::nullopt;
  for (const auto& [m, ij] : targets_of_degree(index, target_degree)) {
    PolyMatrix t = target_matrix(index, m, ij.first, ij.second);
    if (!fs.membership(t)) return false;
  }
  return true;
}

DeterminacyReport limited(const std::string& criterion, int k, const ResourceLimitError& e) {
  DeterminacyReport rep;
  rep.criterion = criterion;
  rep.k = k;
  rep.verdict = Verdict::Inconclusive;
  rep.note = std::string("resource limit: ") + e.what();
  return rep;
}

using GenBuilder = std::vector<GenSpec> (*)(const GermPresentation&);

// Shared scan driver: find the first k in [1, kmax] whose containment
// check passes. `negative_is_verdict` distinguishes "not k-determined yet"
// (a real negative at kmax) from existence questions that only ever go
// inconclusive at the bound.
DeterminacyReport scan(const GermPresentation& g, int kmax, FieldMode mode,
                       const std::string& criterion, GenBuilder build, int shape_n,
                       int shape_p, long (*target_deg)(int), bool negative_is_verdict) {
  DeterminacyReport rep;
  rep.criterion = criterion;
  std::vector<GenSpec> gens;
  try {
    gens = build(g);
  } catch (const ResourceLimitError& e) {
    return limited(criterion, 0, e);
  }
  bool fp_skipped = false;
  for (int k = 1; k <= kmax; ++k) {
    try {
      if (mode == FieldMode::PrimeScreen && k < kmax) {
        auto quick = fp_probe(gens, g.r(), shape_n, shape_p, target_deg(k), k + 1);
        if (quick && !*quick) {
          fp_skipped = true;
          continue;  // a modular non-membership is conclusive for skipping
        }
      }
      DeterminacyReport step =
          probe(gens, g.r(), shape_n, shape_p, g.varnames, target_deg(k), k + 1, mode);
      step.criterion = criterion;
      step.k = k;
      if (step.verdict == Verdict::Contained) {
        if (fp_skipped && step.note.empty())
          step.note = "lower k values screened out modulo the pre-screen prime";
        return step;
      }
      if (k == kmax) {
        if (!negative_is_verdict) {
          step.verdict = Verdict::Inconclusive;
          step.note = "no containment up to the requested bound";
        }
        return step;
      }
    } catch (const ResourceLimitError& e) {
      return limited(criterion, k, e);
    }
  }
  rep.k = kmax;
  rep.verdict = Verdict::Inconclusive;
  rep.note = "no containment up to the requested bound";
  return rep;
}

}  // namespace

DeterminacyReport check_infinitesimal(const GermPresentation& g, int k, FieldMode mode) {
  g.validate();
  DeterminacyReport rep;
  try {
    rep = probe(infinitesimal_gens(g), g.r(), g.n(), g.p(), g.varnames, k + 1, k + 1, mode);
  } catch (const ResourceLimitError& e) {
    return limited("infinitesimal", k, e);
  }
  rep.criterion = "infinitesimal";
  rep.k = k;
  if (rep.verdict == Verdict::Contained && rep.note.empty())
    rep.note = "degree-" + std::to_string(k + 1) +
               " targets absorbed; higher degrees follow by Nakayama";
  return rep;
}

DeterminacyReport check_tangent_contains_power(const GermPresentation& g, int k,
                                               FieldMode mode) {
  g.validate();
  DeterminacyReport rep;
  try {
    rep = probe(tangent_gens(g), g.r(), g.n(), g.p(), g.varnames, k, k + 1, mode);
  } catch (const ResourceLimitError& e) {
    return limited("tangent-power", k, e);
  }
  rep.criterion = "tangent-power";
  rep.k = k;
  return rep;
}

DeterminacyReport check_IG_power(const GermPresentation& g, int k, FieldMode mode) {
  g.validate();
  DeterminacyReport rep;
  try {
    rep = probe(ig_gens(g), g.r(), 1, 1, g.varnames, k, k + 1, mode);
  } catch (const ResourceLimitError& e) {
    return limited("ideal-power", k, e);
  }
  rep.criterion = "ideal-power";
  rep.k = k;
  return rep;
}

DeterminacyReport isolated_singularity_check(const GermPresentation& g, int kmax,
                                             FieldMode mode) {
  g.validate();
  DeterminacyReport rep =
      scan(g, kmax, mode, "isolated", &ig_gens, 1, 1, [](int k) { return long(k); },
           /*negative_is_verdict=*/false);
  if (rep.verdict == Verdict::Contained)
    rep.note = "M^" + std::to_string(rep.k) + " inside I_G(M): isolated singularity";
  return rep;
}

DeterminacyReport determinacy_degree(const GermPresentation& g, int kmax, FieldMode mode) {
  g.validate();
  DeterminacyReport rep = scan(g, kmax, mode, "determinacy-degree", &infinitesimal_gens,
                               g.n(), g.p(), [](int k) { return long(k) + 1; },
                               /*negative_is_verdict=*/false);
  if (rep.verdict == Verdict::Contained)
    rep.note = std::to_string(rep.k) + "-determined (sufficient bound)";
  return rep;
}

TjurinaReport tjurina_number(const GermPresentation& g, int dmax, FieldMode mode) {
  g.validate();
  TjurinaReport rep;
  std::vector<GenSpec> gens = tangent_gens(g);
  // The quotient here is by J(M) + Im(g), i.e. every family taken with
  // full O coefficients.
  for (auto& gs : gens) gs.min_mult_degree = 0;

  long prev = -1;
  for (int d = 1; d <= dmax; ++d) {
    JetIndex index;
    JetSubspace qs;
    try {
      index = JetIndex::build(g.r(), g.n(), g.p(), d);
      qs = JetSubspace::span_from_generators(gens, index);
    } catch (const ResourceLimitError&) {
      rep.resource_limited = true;
      return rep;
    }
    long dim = qs.quotient_dimension();
    rep.dims.push_back({d, dim});
    if (prev == dim) {
      // equal consecutive dimensions only count with a power-containment
      // certificate: every degree-d monomial target lies in the span
      bool certified = true;
      if (mode == FieldMode::PrimeScreen) {
        auto quick = fp_probe(gens, g.r(), g.n(), g.p(), d, d);
        if (quick && !*quick) certified = false;
      }
      if (certified) {
        for (const auto& [m, ij] : targets_of_degree(index, d)) {
          PolyMatrix t = target_matrix(index, m, ij.first, ij.second);
          if (!qs.membership(t).contained) {
            certified = false;
            break;
          }
        }
      }
      if (certified) {
        rep.value = dim;
        rep.certificate_degree = d;
        return rep;
      }
    }
    prev = dim;
  }
  rep.diverged = true;
  return rep;
}

}  // namespace matgerm
