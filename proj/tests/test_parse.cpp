#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polysmooth/errors.hpp"
#include "polysmooth/parse.hpp"

using namespace polysmooth;

TEST_CASE("basic polynomials") {
  CHECK(parse_poly("t^4+4*t^2-t+1") == RatPoly(IntPoly{1, -1, 4, 0, 1}));
  CHECK(parse_poly("t^2+2*t-2") == RatPoly(IntPoly{-2, 2, 1}));
  CHECK(parse_poly("x") == RatPoly::var());
  CHECK(parse_poly("0") == RatPoly());
  CHECK(parse_poly("  7 ") == RatPoly::constant(Rat(7)));
  CHECK(parse_poly("(t-1)*(t+1)") == RatPoly(IntPoly{-1, 0, 1}));
  CHECK(parse_poly("(t-1)(t+1)") == RatPoly(IntPoly{-1, 0, 1}));
  CHECK(parse_poly("2t^3") == RatPoly(IntPoly::monomial(2, 3)));
  CHECK(parse_poly("-t^2 - -3") == RatPoly(IntPoly{3, 0, -1}));
  CHECK(parse_poly("t^2^3") == RatPoly(IntPoly::monomial(1, 8)));
  CHECK(parse_poly("121t^3+231t^2+147t+31") == RatPoly(IntPoly{31, 147, 231, 121}));
}

TEST_CASE("top-level rational division") {
  RatPoly p = parse_poly("-(x^2+x+3)/2");
  CHECK(p == RatPoly(IntPoly{-3, -1, -1}, Int(2)));
  CHECK(p.den() == 2);
  CHECK(parse_poly("(t^2)/-4") == RatPoly(IntPoly{0, 0, -1}, Int(4)));
  CHECK(parse_poly("6/2") == RatPoly::constant(Rat(3)));
  CHECK_THROWS_AS(parse_poly("1/2+t"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("(1/2)*t"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("t/0"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("t/s"), SyntaxError);
}

TEST_CASE("errors carry byte offsets") {
  CHECK_THROWS_AS(parse_poly("t^-1"), NonIntegerExponent);
  CHECK_THROWS_AS(parse_poly("t^(1-2)"), NonIntegerExponent);
  CHECK_THROWS_AS(parse_poly("t^t"), NonIntegerExponent);
  CHECK_THROWS_AS(parse_poly("t^x"), SyntaxError);
  try {
    parse_poly("t+%");
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 2);
  }
  CHECK_THROWS_AS(parse_poly("(t+1"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("t+"), SyntaxError);
  CHECK_THROWS_AS(parse_poly(""), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x+y"), SyntaxError);
}

TEST_CASE("parse-print-parse identity") {
  for (const char* text : {"t^4+4*t^2-t+1", "-(x^2+x+3)/2", "121*t^3+231*t^2+147*t+31",
                           "(2*s^5-3*s+1)/7", "-5", "t"}) {
    RatPoly p = parse_poly(text);
    std::string printed = p.str(poly_variable(text));
    CHECK(parse_poly(printed) == p);
    CHECK(parse_poly(printed).str(poly_variable(text)) == printed);
  }
  CHECK(poly_variable("x^2+1") == "x");
  CHECK(poly_variable("123") == "t");
}
