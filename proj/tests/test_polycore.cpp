#include <doctest.h>

#include "matgerm/parser.hpp"
#include "matgerm/random.hpp"

#include "oracles.hpp"

using namespace matgerm;

namespace {
const std::vector<std::string> xyz = {"x", "y", "z"};
Polynomial P(const std::string& s) { return parse_polynomial(s, xyz); }
}  // namespace

TEST_SUITE("polycore") {

TEST_CASE("parser handles the grammar") {
  CHECK(P("x + y") == P("y + x"));
  CHECK(P("2*x*y^2") == P("x*y*y") * Rat(2));
  CHECK(P("(x + y)*(x - y)") == P("x^2 - y^2"));
  CHECK(P("1/2*x - 1/2*x").is_zero());
  CHECK(P("-x^3*z + y^2") == P("y^2") - P("x^3*z"));
  CHECK(P("x^0") == Polynomial::constant(3, 1));
  CHECK(P("3/4") == Polynomial::constant(3, Rat(3, 4)));
}

TEST_CASE("parser rejects malformed input with positions") {
  CHECK_THROWS_AS(P("x y"), ParseError);       // implicit multiplication
  CHECK_THROWS_AS(P("x^-1"), ParseError);      // negative exponent
  CHECK_THROWS_AS(P("w + 1"), ParseError);     // unknown variable
  CHECK_THROWS_AS(P("x + "), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  try {
    P("x * q");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("print/parse fixed point") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_polynomial(3, 5, 6, 9, rng, 0);
    std::string s = to_string(p, xyz);
    CHECK(parse_polynomial(s, xyz) == p);
    CHECK(to_string(parse_polynomial(s, xyz), xyz) == s);
  }
  CHECK(to_string(Polynomial::zero(3), xyz) == "0");
}

TEST_CASE("arithmetic agrees with evaluation") {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    Polynomial a = random_polynomial(3, 4, 5, 9, rng, 0);
    Polynomial b = random_polynomial(3, 4, 5, 9, rng, 0);
    auto pt = oracles::random_point(3, rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
  }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    Polynomial a = random_polynomial(2, 4, 4, 9, rng, 0);
    Polynomial b = random_polynomial(2, 4, 4, 9, rng, 0);
    for (int v = 0; v < 2; ++v)
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
  }
  CHECK(P("x^3*y").derivative(0) == P("3*x^2*y"));
  CHECK(P("x^3*y").derivative(2).is_zero());
}

TEST_CASE("truncation keeps exactly the low-degree part") {
  Polynomial p = P("1 + x + x^2*y + z^4");
  CHECK(p.truncate(2) == P("1 + x"));
  CHECK(p.truncate(3) == P("1 + x + x^2*y"));
  CHECK(p.truncate(0) == P("1"));
  CHECK(p.truncate(10) == p);
}

TEST_CASE("filtration and weighted homogeneity") {
  WeightSystem w({3, 8, 7});
  CHECK(*P("y^2").filtration(w) == 16);
  CHECK(*P("x^3*z").filtration(w) == 16);
  CHECK(*P("y^2 - x^3*z").filtration(w) == 16);
  CHECK(*P("x + y^2").filtration(w) == 3);
  CHECK(!Polynomial::zero(3).filtration(w).has_value());
  CHECK(P("y^2 - x^3*z").is_weighted_homogeneous(w));
  CHECK(!P("x + y").is_weighted_homogeneous(w));
  CHECK(!Polynomial::zero(3).is_weighted_homogeneous(w));
  CHECK_THROWS(WeightSystem({0, 1}));
}

TEST_CASE("graded-lex order sorts by total degree then lex") {
  Monomial::GradedLexLess less;
  Monomial x2(std::vector<uint32_t>{2, 0}), xy(std::vector<uint32_t>{1, 1}),
      y(std::vector<uint32_t>{0, 1});
  CHECK(less(y, x2));
  CHECK(less(y, xy));
  CHECK(less(xy, x2));
  CHECK(!less(x2, x2));
}

TEST_CASE("random polynomials are deterministic and well-formed") {
  Polynomial a = random_polynomial(3, 3, 4, 9, uint64_t(42), 1);
  Polynomial b = random_polynomial(3, 3, 4, 9, uint64_t(42), 1);
  CHECK(a == b);
  CHECK(a.constant_term() == 0);
  CHECK(a.total_degree() <= 3);
  CHECK(a.term_count() == 4);
  for (const auto& [m, c] : a.terms()) {
    CHECK(m.total_degree() >= 1);
    CHECK(c != 0);
    CHECK(abs(c.get_num()) <= 9);
  }
}

}  // TEST_SUITE
