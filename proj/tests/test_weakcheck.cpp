#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "superirr/weakcheck.hpp"
#include "superirr/zfactor.hpp"

using namespace superirr;
using namespace superirr::testing;

TEST_CASE("trinomial") {
    CHECK(trinomial(2) == IntPoly({1, 2, 0, 0, 0, 1}));
    CHECK(trinomial(3) == IntPoly({1, 2, 0, 0, 0, 0, 0, 1}));
    CHECK_THROWS(trinomial(1));
    CHECK_THROWS(trinomial(0));
    for (unsigned k = 2; k <= 6; ++k)
        CHECK(is_irreducible_over_rationals(trinomial(k)));
}

TEST_CASE("trinomial_disc") {
    CHECK(trinomial_disc(2) == 11317);
    for (unsigned k = 2; k <= 10; ++k) {
        Integer d = trinomial_disc(k);  // includes the closed-form/resultant cross-check
        CHECK(mpz_odd_p(d.get_mpz_t()));
    }
    // sign alternates with k
    CHECK(trinomial_disc(2) > 0);
    CHECK(trinomial_disc(3) < 0);
}

TEST_CASE("square_in_order pinned values") {
    OrderElement one{2, {Integer(1), Integer(0), Integer(0), Integer(0), Integer(0)}};
    CHECK(square_in_order(one).coords ==
          std::vector<Integer>{1, 0, 0, 0, 0});

    OrderElement theta3{2, {Integer(0), Integer(0), Integer(0), Integer(1), Integer(0)}};
    CHECK(square_in_order(theta3).coords ==
          std::vector<Integer>{0, -1, -2, 0, 0});

    OrderElement theta4{2, {Integer(0), Integer(0), Integer(0), Integer(0), Integer(1)}};
    CHECK(square_in_order(theta4).coords ==
          std::vector<Integer>{0, 0, 0, -1, -2});
}

TEST_CASE("square_in_order agrees with generic squaring mod f_k (random)") {
    auto rng = test_rng(41);
    std::uniform_int_distribution<long> d(-9, 9);
    for (unsigned k = 2; k <= 4; ++k) {
        IntPoly f = trinomial(k);
        for (int t = 0; t < 200; ++t) {
            std::vector<Integer> coords(2 * k + 1);
            for (auto& c : coords) c = d(rng);
            OrderElement a{k, coords};
            OrderElement sq = square_in_order(a);
            // oracle: polynomial square, then remainder mod the monic f_k
            RatPoly generic = divrem(IntPoly(coords).to_rat() * IntPoly(coords).to_rat(),
                                     f.to_rat()).second;
            std::vector<Integer> expect(2 * k + 1, Integer(0));
            for (int i = 0; i <= generic.degree(); ++i)
                expect[i] = generic.coeff(i).get_num();
            CHECK(sq.coords == expect);
        }
    }
}

TEST_CASE("congruence_verify") {
    auto r2 = congruence_verify(2);
    CHECK(r2.vectors_checked == 992);
    CHECK(r2.violations.empty());

    auto r3 = congruence_verify(3);
    CHECK(r3.vectors_checked == 16256);  // 4^7 - 2^7
    CHECK(r3.violations.empty());

    CHECK_THROWS(congruence_verify(1));
    CHECK_THROWS(congruence_verify(6));

    // worker count never changes the outcome
    auto serial = congruence_verify(2, 1);
    auto parallel = congruence_verify(2, 4);
    CHECK(serial.vectors_checked == parallel.vectors_checked);
    CHECK(serial.violations == parallel.violations);
}

TEST_CASE("weak_check small boxes") {
    auto r = weak_check(2, Integer(6));
    CHECK(r.passed());
    CHECK(r.pairs_checked == 12 * 13);

    auto r3 = weak_check(3, Integer(3));
    CHECK(r3.passed());

    CHECK_THROWS(weak_check(1, Integer(5)));
    CHECK_THROWS(weak_check(2, Integer(0)));

    auto serial = weak_check(2, Integer(4), 1);
    auto parallel = weak_check(2, Integer(4), 3);
    CHECK(serial.pairs_checked == parallel.pairs_checked);
    CHECK(serial.counterexamples.size() == parallel.counterexamples.size());
}

TEST_CASE("weak_check exercises both powers") {
    // x^10 + 2x^2 + 1 (a=1, b=0, j=2) is irreducible
    IntPoly f = trinomial(2);
    CHECK(is_irreducible_over_rationals(compose(f, IntPoly({0, 0, 1}))));
    CHECK(is_irreducible_over_rationals(compose(f, IntPoly({0, 1, 1}))));
}
