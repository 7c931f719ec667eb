#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "superirr/bigpoly.hpp"

using namespace superirr;
using namespace superirr::testing;

static RatPoly rp(std::initializer_list<long> c) { return RatPoly(c); }
static IntPoly ip(std::initializer_list<long> c) { return IntPoly(c); }

TEST_CASE("mul basics") {
    CHECK(rp({1, 1}) * rp({-1, 1}) == rp({-1, 0, 1}));
    // (x^2+1)(x^2+2x+2) = x^4+2x^3+3x^2+2x+2
    CHECK(mul(rp({1, 0, 1}), rp({2, 2, 1})) == rp({2, 2, 3, 2, 1}));
    RatPoly f = rp({3, 0, -2, 5});
    CHECK(f * RatPoly::one() == f);
    CHECK((f * RatPoly::zero()).is_zero());
}

TEST_CASE("compose basics") {
    // x^4+1 after x^2 -> x^8+1
    CHECK(compose(rp({1, 0, 0, 0, 1}), rp({0, 0, 1})) ==
          RatPoly({1, 0, 0, 0, 0, 0, 0, 0, 1}));
    RatPoly f = rp({3, 2, 1, 0, 1});  // x^4+x^2+2x+3
    RatPoly g({make_rational(-3, 2), make_rational(-1, 2), make_rational(-1, 2)});
    RatPoly fg = compose(f, g);
    CHECK(fg.degree() == 8);
    CHECK(compose(f, RatPoly::x()) == f);
    // degree multiplicativity
    CHECK(fg.degree() == f.degree() * g.degree());
}

TEST_CASE("compose associativity (random)") {
    auto rng = test_rng(101);
    for (int t = 0; t < 40; ++t) {
        RatPoly f = random_rat_poly(rng, 1 + t % 4, -4, 4, 3);
        RatPoly g = random_rat_poly(rng, 1 + (t / 2) % 3, -3, 3, 2);
        RatPoly h = random_rat_poly(rng, 1 + t % 2, -3, 3, 2);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = content_primitive(ip({4, 0, 6}));
    CHECK(c1 == 2);
    CHECK(p1 == ip({2, 0, 3}));
    auto [c2, p2] = content_primitive(ip({0, -3}));
    CHECK(c2 == -3);
    CHECK(p2 == ip({0, 1}));
    auto [c3, p3] = content_primitive(ip({5}));
    CHECK(c3 == 5);
    CHECK(p3 == IntPoly::one());
    CHECK_THROWS(content_primitive(IntPoly::zero()));
}

TEST_CASE("content * primitive reconstructs input (random)") {
    auto rng = test_rng(202);
    for (int t = 0; t < 1000; ++t) {
        IntPoly f = random_int_poly(rng, t % 9, -40, 40);
        auto [c, p] = content_primitive(f);
        CHECK(p * c == f);
        CHECK(p.content() == 1);
        CHECK(p.lc() > 0);
    }
}

TEST_CASE("reversal") {
    CHECK(reversal(rp({1, 2, 0, 1})) == rp({1, 0, 2, 1}));  // x^3+2x+1 -> x^3+2x^2+1
    RatPoly monic = rp({7, -2, 0, 0, 1});
    CHECK(reversal(monic).coeff(0) == 1);
    auto rng = test_rng(303);
    for (int t = 0; t < 50; ++t) {
        RatPoly f = random_rat_poly(rng, 1 + t % 6, -5, 5, 3);
        if (f.coeff(0) == 0) continue;
        CHECK(reversal(reversal(f)) == f);
    }
    // degree drop equals the multiplicity of the root 0
    RatPoly with_zero = rp({0, 0, 3, 1});  // x^2(x+3)
    CHECK(reversal(with_zero).degree() == with_zero.degree() - 2);
}

TEST_CASE("shift_scale") {
    CHECK(shift_scale(rp({0, 0, 1}), Rational(1), Rational(1)) == rp({1, 2, 1}));
    CHECK(shift_scale(rp({3, 2, 0, 0, 1}), Rational(0), Rational(2)) ==
          rp({48, 16, 0, 0, 1}));
    RatPoly f = rp({-5, 3, 0, 2});
    CHECK(shift_scale(f, Rational(0), Rational(1)) == f);
    CHECK_THROWS(shift_scale(f, Rational(1), Rational(0)));
}

TEST_CASE("scale-compose identity (random)") {
    auto rng = test_rng(404);
    for (int t = 0; t < 60; ++t) {
        RatPoly f = random_rat_poly(rng, 1 + t % 5, -4, 4, 3);
        RatPoly g = random_rat_poly(rng, 1 + t % 3, -4, 4, 2);
        Rational a = make_rational(1 + t % 5, 1 + t % 3);
        if (t % 2) a = -a;
        RatPoly F = shift_scale(f, Rational(0), a);
        Rational an(1);
        for (int i = 0; i < f.degree(); ++i) an *= a;
        CHECK(compose(F, g * a) == compose(f, g) * an);
    }
}

TEST_CASE("resultant: pinned values") {
    CHECK(resultant(rp({1, 0, 1}), RatPoly::x()) == 1);
    // linear case Res(x - a, g) = g(a)
    RatPoly g = rp({4, -3, 0, 2});
    CHECK(resultant(rp({-7, 1}), g) == g.eval(Rational(7)));
    // norm of alpha + 2 in Q[x]/(x^4+1)
    CHECK(resultant(rp({1, 0, 0, 0, 1}), rp({2, 1})) == 17);
    CHECK(resultant(rp({1, 0, 1}), rp({1, 0, 1})) == 0);
}

TEST_CASE("resultant agrees with Sylvester determinant (random)") {
    auto rng = test_rng(505);
    for (int t = 0; t < 300; ++t) {
        IntPoly f = random_int_poly(rng, 1 + t % 7, -9, 9);
        IntPoly g = random_int_poly(rng, 1 + (t / 3) % 6, -9, 9);
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant multiplicativity for monic f (random)") {
    auto rng = test_rng(606);
    for (int t = 0; t < 100; ++t) {
        IntPoly f = random_int_poly(rng, 2 + t % 4, -6, 6);
        std::vector<Integer> c(f.coeffs());
        c.back() = 1;
        RatPoly fm = IntPoly(std::move(c)).to_rat();
        RatPoly g = random_rat_poly(rng, 1 + t % 3, -5, 5, 2);
        RatPoly h = random_rat_poly(rng, 1 + (t / 2) % 3, -5, 5, 2);
        CHECK(resultant(fm, g * h) == resultant(fm, g) * resultant(fm, h));
    }
}

TEST_CASE("discriminant") {
    // quadratic: b^2 - 4c
    for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c)
            CHECK(discriminant(RatPoly(std::vector<Rational>{Rational(c), Rational(b),
                                                             Rational(1)})) ==
                  Rational(b * b - 4 * c));
    CHECK(discriminant(rp({1, 2, 0, 1})) == -59);
    CHECK(discriminant(rp({1, 2, 0, 0, 0, 1})) == 11317);
}

TEST_CASE("divrem and exact division") {
    RatPoly f = rp({2, 2, 3, 2, 1});
    RatPoly g = rp({1, 0, 1});
    auto [q, r] = divrem(f, g);
    CHECK(r.is_zero());
    CHECK(q == rp({2, 2, 1}));
    CHECK(q * g + r == f);

    auto rng = test_rng(707);
    for (int t = 0; t < 200; ++t) {
        RatPoly a = random_rat_poly(rng, t % 8, -6, 6, 3);
        RatPoly b = random_rat_poly(rng, 1 + t % 4, -6, 6, 3);
        auto [qq, rr] = divrem(a, b);
        CHECK(qq * b + rr == a);
        CHECK(rr.degree() < b.degree());
    }

    CHECK(try_exact_div(ip({-1, 0, 1}), ip({1, 1})).value() == ip({-1, 1}));
    CHECK(!try_exact_div(ip({1, 0, 1}), ip({1, 1})).has_value());
    CHECK(!try_exact_div(ip({2, 2}), ip({1, 2})).has_value());
    CHECK(divides(ip({1, 1}), ip({1, 2, 1})));
}

TEST_CASE("gcd and ext_gcd") {
    RatPoly a = rp({-1, 0, 1});  // (x-1)(x+1)
    RatPoly b = rp({1, 2, 1});   // (x+1)^2
    CHECK(gcd(a, b) == rp({1, 1}));
    auto e = ext_gcd(a, b);
    CHECK(e.u * a + e.v * b == e.g);
    CHECK(e.g == rp({1, 1}));
    CHECK(gcd(RatPoly::zero(), RatPoly::zero()).is_zero());
    CHECK(is_squarefree(a));
    CHECK(!is_squarefree(b));
}

TEST_CASE("split_integer") {
    RatPoly f({make_rational(3, 2), Rational(0), make_rational(-9, 4)});
    auto [s, p] = f.split_integer();
    CHECK(p.content() == 1);
    CHECK(p.lc() > 0);
    CHECK(p.to_rat() * s == f);
}
