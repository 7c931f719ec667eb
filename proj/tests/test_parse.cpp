#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "superirr/parse.hpp"

using namespace superirr;
using namespace superirr::testing;

TEST_CASE("basic expressions") {
    CHECK(parse_polynomial("x^4 + 2*x + 1") == RatPoly({1, 2, 0, 0, 1}));
    CHECK(parse_polynomial("x") == RatPoly::x());
    CHECK(parse_polynomial("7") == RatPoly({7}));
    CHECK(parse_polynomial("0") == RatPoly::zero());
    CHECK(parse_polynomial("x^0") == RatPoly::one());
    CHECK(parse_polynomial("(x+1)^2") == RatPoly({1, 2, 1}));
    CHECK(parse_polynomial("2*x - 3*x") == RatPoly({0, -1}));
    CHECK(parse_polynomial("  x ^ 2  -  1 ") == RatPoly({-1, 0, 1}));
}

TEST_CASE("rational literals and unary minus") {
    RatPoly g = parse_polynomial("-(1/2)*(x^2+x+3)");
    CHECK(g == RatPoly({make_rational(-3, 2), make_rational(-1, 2), make_rational(-1, 2)}));
    CHECK(parse_polynomial("1/2") == RatPoly({make_rational(1, 2)}));
    CHECK(parse_polynomial("-x") == RatPoly({0, -1}));
    CHECK(parse_polynomial("-x^2") == RatPoly({0, 0, -1}));     // minus binds after ^
    CHECK(parse_polynomial("3/2*x^2") == RatPoly({Rational(0), Rational(0), make_rational(3, 2)}));
    CHECK(parse_polynomial("--x") == RatPoly::x());
}

TEST_CASE("errors carry positions") {
    try {
        parse_polynomial("x^^2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x x"), ParseError);     // implicit multiplication
    CHECK_THROWS_AS(parse_polynomial("2x"), ParseError);      // implicit multiplication
    CHECK_THROWS_AS(parse_polynomial("(x+1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x/2"), ParseError);     // '/' only in literals
    CHECK_THROWS_AS(parse_polynomial("x^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
}

TEST_CASE("render round trip (random)") {
    auto rng = test_rng(51);
    for (int t = 0; t < 500; ++t) {
        RatPoly f = random_rat_poly(rng, t % 9, -30, 30, 12);
        CHECK(parse_polynomial(render(f)) == f);
    }
    CHECK(parse_polynomial(render(RatPoly::zero())) == RatPoly::zero());
    CHECK(parse_polynomial(render(RatPoly({-1}))) == RatPoly({-1}));
}
