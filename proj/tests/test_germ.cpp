#include <doctest.h>

#include "matgerm/germ.hpp"
#include "matgerm/identities.hpp"
#include "matgerm/parser.hpp"

#include "oracles.hpp"

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

// 3 x 4 matrix of 12 independent variables m11..m34 (fully generic entries)
GermPresentation generic_3x4() {
  GermPresentation g;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j)
      g.varnames.push_back("m" + std::to_string(i) + std::to_string(j));
  g.m = PolyMatrix(3, 4, 12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) g.m.at(i, j) = Polynomial::variable(12, i * 4 + j);
  return g;
}

}  // namespace

TEST_SUITE("germ") {

TEST_CASE("maximal minors match the permutation-expansion oracle") {
  Rng rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 1 + int(rng.below(3));
    GermPresentation g = random_germ(n, 3, rng);
    MinorVector f = maximal_minors(g);
    REQUIRE(int(f.size()) == n + 1);
    for (int j = 0; j <= n; ++j)
      CHECK(f[j] == oracles::permanent_style_det(g.m.without(-1, j)));
  }
}

TEST_CASE("benchmark 2x3 germ minors") {
  MinorVector f = maximal_minors(example_germ());
  const auto names = example_germ().varnames;
  CHECK(f[0] == parse_polynomial("y^2 - x^3*z", names));
  CHECK(f[1] == parse_polynomial("z*y - x^5", names));
  CHECK(f[2] == parse_polynomial("z^2 - x^2*y", names));
}

TEST_CASE("generic 3x4 cofactors reproduce the hand expansion") {
  GermPresentation g = generic_3x4();
  auto mvar = [&](int i, int j) { return Polynomial::variable(12, (i - 1) * 4 + (j - 1)); };
  // cofactor of entry (1,2) after deleting column 1: m23*m34 - m33*m24
  CHECK(cofactor(g, 0, 0, 1) == mvar(2, 3) * mvar(3, 4) - mvar(3, 3) * mvar(2, 4));
  // the column combination for f_1 * E_12 leaves rows 2 and 3 clean:
  // expanding alien rows against row-1 cofactors gives zero
  for (int u : {1, 2}) {
    Polynomial alien(12);
    for (int s = 1; s < 4; ++s) alien += g.m.at(u, s) * cofactor(g, 0, 0, s);
    CHECK(alien.is_zero());
  }
  // while the k = 1 row reproduces f_1 itself
  Polynomial diag(12);
  for (int s = 1; s < 4; ++s) diag += g.m.at(0, s) * cofactor(g, 0, 0, s);
  CHECK(diag == maximal_minors(g)[0]);
}

TEST_CASE("Laplace expansion and alien-row annihilation") {
  Rng rng(22);
  for (int rep = 0; rep < 8; ++rep) {
    int n = 1 + int(rng.below(3));
    GermPresentation g = random_germ(n, 2 + int(rng.below(3)), rng);
    MinorVector f = maximal_minors(g);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j <= n; ++j) {
        Polynomial sum(g.r());
        for (int s = 0; s <= n; ++s)
          if (s != j) sum += g.m.at(k, s) * cofactor(g, j, k, s);
        CHECK(sum == f[j]);
        for (int u = 0; u < n; ++u) {
          if (u == k) continue;
          Polynomial alien(g.r());
          for (int s = 0; s <= n; ++s)
            if (s != j) alien += g.m.at(u, s) * cofactor(g, j, k, s);
          CHECK(alien.is_zero());
        }
      }
  }
}

TEST_CASE("cofactor transposition sign identity") {
  Rng rng(23);
  for (int rep = 0; rep < 8; ++rep) {
    int n = 1 + int(rng.below(3));
    GermPresentation g = random_germ(n, 2, rng);
    for (int j = 0; j <= n; ++j)
      for (int l = 0; l <= n; ++l) {
        if (l == j) continue;
        for (int i = 0; i < n; ++i) {
          Polynomial rhs = cofactor(g, l, i, j);
          if ((l - j + 1) % 2 != 0) rhs = -rhs;
          CHECK(cofactor(g, j, i, l) == rhs);
        }
      }
  }
}

TEST_CASE("nested-cofactor row reconstruction") {
  // cof^j(m_ki) = (-1)^(k + local_i(j)) * sum_t m_qt cof^j_ki(m_qt), any q != k
  Rng rng(24);
  for (int rep = 0; rep < 8; ++rep) {
    int n = 2 + int(rng.below(2));
    GermPresentation g = random_germ(n, 2, rng);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i <= n; ++i) {
          if (i == j) continue;
          for (int q = 0; q < n; ++q) {
            if (q == k) continue;
            Polynomial sum(g.r());
            for (int t = 0; t <= n; ++t) {
              if (t == i || t == j) continue;
              sum += g.m.at(q, t) * nested_cofactor(g, j, k, i, q, t);
            }
            long beta = k + i - (i > j ? 1 : 0);
            if (beta % 2 != 0) sum = -sum;
            CHECK(cofactor(g, j, k, i) == sum);
          }
        }
  }
}

TEST_CASE("nested cofactor is 1 when n = 1") {
  Rng rng(25);
  GermPresentation g = random_germ(1, 2, rng);
  CHECK(nested_cofactor(g, 0, 0, 1, 0, 1) == Polynomial::constant(2, 1));
  CHECK(cofactor(g, 0, 0, 1) == Polynomial::constant(2, 1));
}

TEST_CASE("jacobian minors equal 2x2 determinants of the jacobian") {
  Rng rng(26);
  GermPresentation g = random_germ(2, 3, rng);
  MinorVector f = maximal_minors(g);
  PolyMatrix jac = jacobian(f, g.r());
  for (int q = 0; q < 3; ++q)
    for (int s = q + 1; s < 3; ++s)
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          Polynomial expect = jac.at(q, a) * jac.at(s, b) - jac.at(q, b) * jac.at(s, a);
          CHECK(jacobian_minor(f, q, s, a, b).value == expect);
        }
}

TEST_CASE("ideal generators drop zeros and duplicates") {
  GermPresentation g;
  g.varnames = {"x", "y"};
  g.m = PolyMatrix(1, 2, 2);
  g.m.at(0, 0) = parse_polynomial("x", g.varnames);
  g.m.at(0, 1) = parse_polynomial("y", g.varnames);
  IdealGenerators ig = ideal_IG(g);
  // f = (y, x), single Delta = -1
  REQUIRE(ig.gens.size() == 3);
  CHECK(ig.gens[0] == parse_polynomial("y", g.varnames));
  CHECK(ig.gens[1] == parse_polynomial("x", g.varnames));
  CHECK(ig.gens[2] == Polynomial::constant(2, -1));
}

TEST_CASE("validation rejects bad shapes and nonzero constants") {
  GermPresentation g = example_germ();
  CHECK_NOTHROW(g.validate());
  GermPresentation bad = g;
  bad.m.at(0, 0) += Polynomial::constant(3, 1);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  GermPresentation square;
  square.varnames = {"x"};
  square.m = PolyMatrix(2, 2, 1);
  CHECK_THROWS_AS(square.validate(), std::invalid_argument);
}

}  // TEST_SUITE
