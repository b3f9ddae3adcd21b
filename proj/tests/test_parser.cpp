#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asurj/parse.hpp"
#include "oracles.hpp"

using namespace asurj;
using namespace asurj::testing;

TEST_CASE("grammar basics") {
  CHECK(parse_poly("0", 4).is_zero());
  CHECK(parse_poly("z3^2 - z4^3 - z4^2", 4) ==
        parse_poly("-z4^3 + z3^2 - z4^2", 4));
  CHECK(parse_poly("(z1 - 1)*(z1 + 1)", 2) == parse_poly("z1^2 - 1", 2));
  CHECK(parse_poly("3/2*z1", 1) == Rational(3, 2) * MultiPoly::variable(1, 1));
  CHECK(parse_poly("  z1 +\n 2 ", 1) == parse_poly("z1+2", 1));
  CHECK(parse_poly("-z1", 1) == -MultiPoly::variable(1, 1));
  CHECK(parse_poly("2 - -3", 1) == MultiPoly::constant(1, Rational(5)));
  // w-letter aliases the same variables
  CHECK(parse_poly("w3^2 - w4^3 - w4^2", 4) == parse_poly("z3^2 - z4^3 - z4^2", 4));
  CHECK(parse_poly("(z1 + 1)^3", 1) == parse_poly("z1^3 + 3*z1^2 + 3*z1 + 1", 1));
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_poly("z1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("z1 $ 2", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("(z1 + 2", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("z1 z2", 2), ParseError);   // implicit multiplication
  CHECK_THROWS_AS(parse_poly("2z1", 2), ParseError);     // ditto
  CHECK_THROWS_AS(parse_poly("z1^-2", 2), ParseError);   // negative exponent
  CHECK_THROWS_AS(parse_poly("z1^(2)", 2), ParseError);  // exponent must be a literal
  CHECK_THROWS_AS(parse_poly("z1^1/2", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("z5", 4), ParseError);      // unknown variable
  CHECK_THROWS_AS(parse_poly("z0", 4), ParseError);
  CHECK_THROWS_AS(parse_poly("z", 4), ParseError);
  CHECK_THROWS_AS(parse_poly("", 4), ParseError);
  try {
    parse_poly("z1 +\n  $", 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
}

TEST_CASE("print emits graded-lex order with explicit operators") {
  CHECK(print_poly(parse_poly("1 + z1^2 - 3*z1", 1)) == "z1^2 - 3*z1 + 1");
  CHECK(print_poly(parse_poly("z2*z1", 2)) == "z1*z2");
  CHECK(print_poly(parse_poly("z1*z2 + z1^2", 2)) == "z1^2 + z1*z2");
  CHECK(print_poly(MultiPoly(3)) == "0");
  CHECK(print_poly(parse_poly("-1/2*z1 + 1/3", 1)) == "-1/2*z1 + 1/3");
  CHECK(print_poly(parse_poly("z3^2 - z4^3 - z4^2", 4), 'w') == "-w4^3 + w3^2 - w4^2");
}

TEST_CASE("printed canonical form re-parses to an equal polynomial") {
  SplitMix64 g(37);
  for (int it = 0; it < 1000; ++it) {
    const int n = static_cast<int>(g.range(1, 5));
    const MultiPoly p = rand_poly(g, n, 7, 4);
    CHECK(parse_poly(print_poly(p), n) == p);
  }
}

TEST_CASE("point literals") {
  const auto p = parse_rational_point("1, -2/3 , 0");
  CHECK(p == std::vector<Rational>{Rational(1), Rational(-2, 3), Rational(0)});
  CHECK(point_is_rational("1,-2/3,0"));
  CHECK(!point_is_rational("1.5,0"));
  CHECK(!point_is_rational("1+2i,0"));

  const auto c = parse_complex_point("1.5, -2i, 1+2i, -0.5-1i, i, -i, 3/2");
  CHECK(c[0] == Complex(1.5, 0.0));
  CHECK(c[1] == Complex(0.0, -2.0));
  CHECK(c[2] == Complex(1.0, 2.0));
  CHECK(c[3] == Complex(-0.5, -1.0));
  CHECK(c[4] == Complex(0.0, 1.0));
  CHECK(c[5] == Complex(0.0, -1.0));
  CHECK(c[6] == Complex(1.5, 0.0));
  CHECK_THROWS_AS(parse_complex_point("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_point("foo"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational_point("1.5"), std::invalid_argument);
}
