#include <doctest.h>

#include "matgerm/identities.hpp"
#include "matgerm/parser.hpp"
#include "matgerm/tangent.hpp"

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

GermPresentation xy_germ() {  // M = (x, y), n = 1
  GermPresentation g;
  g.varnames = {"x", "y"};
  g.m = PolyMatrix(1, 2, 2);
  g.m.at(0, 0) = Polynomial::variable(2, 0);
  g.m.at(0, 1) = Polynomial::variable(2, 1);
  return g;
}

}  // namespace

TEST_SUITE("tangent") {

TEST_CASE("generator set structure for M = (x, y)") {
  GeneratorSet s = GeneratorSet::build(xy_germ());
  REQUIRE(s.jgens.size() == 2);
  REQUIRE(s.cgens.size() == 4);
  REQUIRE(s.rgens.size() == 1);
  auto poly = [](const char* t) {
    return parse_polynomial(t, {"x", "y"});
  };
  // jgens: (1,0) and (0,1)
  CHECK(s.jgens[0].at(0, 0) == poly("1"));
  CHECK(s.jgens[0].at(0, 1).is_zero());
  CHECK(s.jgens[1].at(0, 1) == poly("1"));
  // cgens: C_ij has column i = column j of M
  CHECK(s.cgens[s.cindex(0, 0)].at(0, 0) == poly("x"));
  CHECK(s.cgens[s.cindex(0, 1)].at(0, 0) == poly("y"));
  CHECK(s.cgens[s.cindex(1, 0)].at(0, 1) == poly("x"));
  CHECK(s.cgens[s.cindex(1, 1)].at(0, 1) == poly("y"));
  // rgens: the single R_11 is M itself
  CHECK(s.rgens[0] == xy_germ().m);
}

TEST_CASE("g_map identities") {
  GermPresentation g = example_germ();
  PolyMatrix idp = PolyMatrix::identity(3, 3);
  PolyMatrix idn = PolyMatrix::identity(2, 3);
  PolyMatrix zerop(3, 3, 3), zeron(2, 2, 3);
  CHECK(g_map(idp, zeron, g.m) == g.m);
  CHECK(g_map(zerop, PolyMatrix::identity(2, 3), g.m) == g.m);
  // A = E_jj picks out C_jj(M)
  GeneratorSet s = GeneratorSet::build(g);
  for (int j = 0; j < 3; ++j)
    CHECK(g_map(unit_matrix(3, 3, j, j, 3), zeron, g.m) == s.cgens[s.cindex(j, j)]);
  // M * E_ij = C_ji(M)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(g_map(unit_matrix(3, 3, i, j, 3), zeron, g.m) == s.cgens[s.cindex(j, i)]);
}

TEST_CASE("minor-unit witness on the n = 1 germ") {
  GermPresentation g = xy_germ();
  // f_2 = x = m_11; the certificate is C_11 with coefficient 1
  TangentCombination c = witness_minor_unit(g, 1, 0, 0);
  CHECK(verify_combination(c, g));
  CHECK(c.ccoeffs[0] == Polynomial::constant(2, 1));
  CHECK(c.target.at(0, 0) == Polynomial::variable(2, 0));
}

TEST_CASE("minor-unit witnesses verify for every index of the 2x3 germ") {
  GermPresentation g = example_germ();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 3; ++l) CHECK(verify_combination(witness_minor_unit(g, j, k, l), g));
}

TEST_CASE("gradient-pair witness on the n = 1 germ") {
  GermPresentation g = xy_germ();
  // f = (y, x); target df_2/dx E_11 + df_1/dx E_12 = E_11
  TangentCombination c = witness_gradient_pair(g, 1, 0, 0, 0);
  CHECK(verify_combination(c, g));
  CHECK(c.target.at(0, 0) == Polynomial::constant(2, 1));
  CHECK(c.target.at(0, 1).is_zero());
}

TEST_CASE("gradient-pair witnesses verify for all indices, both orders") {
  GermPresentation g = example_germ();
  MinorVector f = maximal_minors(g);
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) {
      if (j == l) continue;
      for (int gamma = 0; gamma < 3; ++gamma)
        for (int k = 0; k < 2; ++k) {
          TangentCombination c = witness_gradient_pair(g, j, l, gamma, k);
          CHECK(verify_combination(c, g));
          PolyMatrix expect = unit_matrix(2, 3, k, l, 3).scaled(f[j].derivative(gamma));
          PolyMatrix second = unit_matrix(2, 3, k, j, 3).scaled(f[l].derivative(gamma));
          expect = ((l - j + 1) % 2 != 0) ? expect - second : expect + second;
          CHECK(c.target == expect);
        }
    }
}

TEST_CASE("jacobian-minor witness on the n = 1 germ") {
  GermPresentation g = xy_germ();
  // Delta = -1, so the target is -E_11
  TangentCombination c = witness_jacobian_minor(g, 0, 1, 0, 1, 0, 0);
  CHECK(verify_combination(c, g));
  CHECK(c.target.at(0, 0) == Polynomial::constant(2, -1));
}

TEST_CASE("jacobian-minor witnesses verify for all index patterns") {
  GermPresentation g = example_germ();
  MinorVector f = maximal_minors(g);
  for (int q = 0; q < 3; ++q)
    for (int s = 0; s < 3; ++s) {
      if (q == s) continue;
      for (int gamma = 0; gamma < 3; ++gamma)
        for (int nu = 0; nu < 3; ++nu) {
          if (gamma == nu) continue;
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 3; ++l) {
              TangentCombination c = witness_jacobian_minor(g, q, s, gamma, nu, k, l);
              CHECK(verify_combination(c, g));
              CHECK(c.target ==
                    unit_matrix(2, 3, k, l, 3).scaled(jacobian_minor(f, q, s, gamma, nu).value));
            }
        }
    }
}

TEST_CASE("combinations are linear") {
  GermPresentation g = example_germ();
  TangentCombination a = witness_minor_unit(g, 0, 0, 1);
  TangentCombination b = witness_gradient_pair(g, 0, 1, 2, 0);
  Polynomial h = parse_polynomial("x*y - 3*z", g.varnames);
  TangentCombination sum = a.scaled(h);
  sum += b.scaled(Rat(-5, 2));
  CHECK(verify_combination(sum, g));
  // perturbing one coefficient breaks the certificate
  sum.ccoeffs[2] += Polynomial::constant(3, 1);
  CHECK(!verify_combination(sum, g));
}

TEST_CASE("random germs: all three witness families verify") {
  Rng rng(31);
  for (int rep = 0; rep < 12; ++rep) {
    int n = 1 + int(rng.below(3));
    int r = 2 + int(rng.below(3));
    GermPresentation g = random_germ(n, r, rng);
    int j = int(rng.below(uint64_t(n + 1)));
    int l = (j + 1 + int(rng.below(uint64_t(n)))) % (n + 1);
    int k = int(rng.below(uint64_t(n)));
    int gamma = int(rng.below(uint64_t(r)));
    int nu = (gamma + 1 + int(rng.below(uint64_t(r - 1)))) % r;
    CHECK(verify_combination(witness_minor_unit(g, j, k, l), g));
    CHECK(verify_combination(witness_gradient_pair(g, j, l, gamma, k), g));
    CHECK(verify_combination(witness_jacobian_minor(g, j, l, gamma, nu, k, l), g));
    CHECK(verify_combination(witness_jacobian_minor(g, j, l, gamma, nu, k, j), g));
    if (n >= 2) {
      int other = 0;
      while (other == j || other == l) ++other;
      CHECK(verify_combination(witness_jacobian_minor(g, j, l, gamma, nu, k, other), g));
    }
  }
}

}  // TEST_SUITE
