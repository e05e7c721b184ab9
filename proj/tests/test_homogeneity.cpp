#include <doctest.h>

#include "matgerm/homogeneity.hpp"
#include "matgerm/identities.hpp"
#include "matgerm/parser.hpp"

using namespace matgerm;

namespace {

GermPresentation example_germ() {
  GermPresentation g;
  g.varnames = {"x", "y", "z"};
  g.m = PolyMatrix(2, 3, 3);
  const char* entries[2][3] = {{"z", "y", "x^3"}, {"x^2", "z", "y"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) g.m.at(i, j) = parse_polynomial(entries[i][j], g.varnames);
  return g;
}

PolyMatrix theta_entry(const char* expr, int k, int l) {
  PolyMatrix t(2, 3, 3);
  t.at(k, l) = parse_polynomial(expr, {"x", "y", "z"});
  return t;
}

}  // namespace

TEST_SUITE("homogeneity") {

TEST_CASE("benchmark germ accepted with the expected degrees") {
  HomogeneityResult r = check_weighted_homogeneous(example_germ(), WeightSystem({3, 8, 7}));
  REQUIRE(r.ok);
  CHECK(r.type.D == std::vector<std::vector<long>>{{7, 8, 9}, {6, 7, 8}});
  CHECK(r.type.D_u == std::vector<long>{16, 15, 14});
  CHECK(r.type.d_max == 9);
}

TEST_CASE("unit weights are rejected with a named violation") {
  HomogeneityResult r = check_weighted_homogeneous(example_germ(), WeightSystem({1, 1, 1}));
  CHECK(!r.ok);
  CHECK(!r.error.empty());
}

TEST_CASE("zero entries are rejected") {
  GermPresentation g;
  g.varnames = {"x", "y"};
  g.m = PolyMatrix(2, 3, 2);
  g.m.at(0, 0) = parse_polynomial("x", g.varnames);
  g.m.at(1, 1) = parse_polynomial("y", g.varnames);
  g.m.at(0, 1) = parse_polynomial("y", g.varnames);
  g.m.at(0, 2) = parse_polynomial("x", g.varnames);
  g.m.at(1, 0) = parse_polynomial("x", g.varnames);
  // (1,2) entry left zero
  HomogeneityResult r = check_weighted_homogeneous(g, WeightSystem({1, 1}));
  CHECK(!r.ok);
  CHECK(r.error.find("zero") != std::string::npos);
}

TEST_CASE("Euler relation holds exactly for every accepted minor") {
  GermPresentation g = example_germ();
  WeightSystem a({3, 8, 7});
  HomogeneityResult r = check_weighted_homogeneous(g, a);
  REQUIRE(r.ok);
  MinorVector f = maximal_minors(g);
  for (int u = 0; u < 3; ++u) {
    Polynomial lhs(3);
    for (int i = 0; i < 3; ++i)
      lhs += Polynomial::variable(3, i) * f[u].derivative(i) * Rat(a[i]);
    CHECK(lhs == f[u] * Rat(r.type.D_u[u]));
  }
}

TEST_CASE("minor-degree additivity via the rectangle relations") {
  HomogeneityResult r = check_weighted_homogeneous(example_germ(), WeightSystem({3, 8, 7}));
  REQUIRE(r.ok);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < 2; ++k)
        CHECK(r.type.D_u[u] - r.type.D_u[v] == r.type.D[k][v] - r.type.D[k][u]);
}

TEST_CASE("control spec for the benchmark germ") {
  GermPresentation g = example_germ();
  HomogeneityResult r = check_weighted_homogeneous(g, WeightSystem({3, 8, 7}));
  REQUIRE(r.ok);
  ControlFunctionSpec s = control_spec(r.type, g);
  CHECK(s.k1 == 1680);
  CHECK(s.beta == std::vector<long>{105, 112, 120});
  CHECK(!s.degenerate);
  CHECK(s.K % s.k1 == 0);
  CHECK(s.K % s.k2 == 0);
  CHECK(s.c1 * s.k2 == s.K);
  CHECK(s.c2 * s.k1 == s.K);
  for (std::size_t i = 0; i < s.delta_degrees.size(); ++i) {
    CHECK(s.delta_degrees[i].degree > 0);
    CHECK(s.alpha[i] * s.delta_degrees[i].degree == s.k2);
  }
}

TEST_CASE("unit jacobian minor flags the spec degenerate") {
  GermPresentation g;
  g.varnames = {"x", "y"};
  g.m = PolyMatrix(1, 2, 2);
  g.m.at(0, 0) = Polynomial::variable(2, 0);
  g.m.at(0, 1) = Polynomial::variable(2, 1);
  HomogeneityResult r = check_weighted_homogeneous(g, WeightSystem({1, 1}));
  REQUIRE(r.ok);
  ControlFunctionSpec s = control_spec(r.type, g);
  CHECK(s.degenerate);
  CHECK(!s.degenerate_reason.empty());
}

TEST_CASE("classification thresholds around d_max = 9") {
  GermPresentation g = example_germ();
  WeightSystem a({3, 8, 7});
  auto verdict = [&](const PolyMatrix& th) {
    return classify_deformation(g, th, a, 8).verdict;
  };
  CHECK(verdict(theta_entry("x^4", 0, 2)) == Triviality::Trivial);        // fil 12
  CHECK(verdict(theta_entry("x^3", 0, 0)) == Triviality::TrivialSmallT);  // fil 9
  CHECK(verdict(theta_entry("x^2", 0, 0)) == Triviality::NoConclusion);   // fil 6
  CHECK(verdict(PolyMatrix(2, 3, 3)) == Triviality::Trivial);             // zero theta
  // scaling theta by a constant never changes the verdict
  CHECK(verdict(theta_entry("x^3", 0, 0).scaled(Rat(17, 5))) == Triviality::TrivialSmallT);
  // the precondition certificate is attached
  TrivialityVerdict full = classify_deformation(g, theta_entry("x^4", 0, 2), a, 8);
  CHECK(full.precondition.verdict == Verdict::Contained);
}

TEST_CASE("weight scaling a -> m*a scales degrees and keeps verdicts") {
  GermPresentation g = example_germ();
  for (long m : {2L, 5L}) {
    WeightSystem a({3 * m, 8 * m, 7 * m});
    HomogeneityResult r = check_weighted_homogeneous(g, a);
    REQUIRE(r.ok);
    CHECK(r.type.d_max == 9 * m);
    CHECK(r.type.D_u == std::vector<long>{16 * m, 15 * m, 14 * m});
    CHECK(classify_deformation(g, theta_entry("x^3", 0, 0), a, 6).verdict ==
          Triviality::TrivialSmallT);
  }
}

TEST_CASE("filtration certificate: identities and bounds") {
  GermPresentation g = example_germ();
  WeightSystem a({3, 8, 7});
  FiltrationCertificate cert = filtration_certificate(g, theta_entry("x^4", 0, 2), a);
  CHECK(cert.identities_ok);
  CHECK(cert.bounds_asserted);
  CHECK(cert.all_bounds_met);
  CHECK(!cert.bounds.empty());
  for (const auto& b : cert.bounds) {
    CHECK(b.total >= b.threshold);
    CHECK((b.threshold == 2 * cert.spec.k1 + 1 || b.threshold == 2 * cert.spec.k2 + 1));
  }
  // every recorded identity re-verifies through the certificate checker
  for (const auto& c : cert.h_route) CHECK(verify_combination(c, g));
  for (const auto& c : cert.r_route) CHECK(verify_combination(c, g));
}

TEST_CASE("filtration certificate on a random weighted-homogeneous germ") {
  // entries are single monomials, hence weighted homogeneous for any weights
  GermPresentation g;
  g.varnames = {"x", "y"};
  g.m = PolyMatrix(1, 2, 2);
  g.m.at(0, 0) = parse_polynomial("x^2", g.varnames);
  g.m.at(0, 1) = parse_polynomial("y^3", g.varnames);
  PolyMatrix th(1, 2, 2);
  th.at(0, 0) = parse_polynomial("x*y^4", g.varnames);
  FiltrationCertificate cert = filtration_certificate(g, th, WeightSystem({3, 2}));
  CHECK(cert.identities_ok);
  for (const auto& c : cert.h_route) CHECK(verify_combination(c, g));
  for (const auto& c : cert.r_route) CHECK(verify_combination(c, g));
}

TEST_CASE("zero deformation yields a trivially valid certificate") {
  GermPresentation g = example_germ();
  FiltrationCertificate cert = filtration_certificate(g, PolyMatrix(2, 3, 3),
                                                      WeightSystem({3, 8, 7}));
  CHECK(cert.identities_ok);
  CHECK(cert.bounds.empty());
  CHECK(cert.bounds_asserted);
  CHECK(cert.all_bounds_met);
}

}  // TEST_SUITE
