#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "superirr/zfactor.hpp"

using namespace superirr;
using namespace superirr::testing;

static IntPoly ip(std::initializer_list<long> c) { return IntPoly(c); }

TEST_CASE("factor_mod_prime: pinned values") {
    // x^2 + 1 mod 5 = (x+2)(x+3)
    auto f5 = factor_mod_prime(ip({1, 0, 1}), 5);
    REQUIRE(f5.size() == 2);
    CHECK(f5[0].first == ModPoly(5, {2, 1}));
    CHECK(f5[0].second == 1);
    CHECK(f5[1].first == ModPoly(5, {3, 1}));

    // x^2 + 1 mod 3 irreducible
    auto f3 = factor_mod_prime(ip({1, 0, 1}), 3);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first == ModPoly(3, {1, 0, 1}));
    CHECK(f3[0].second == 1);

    // x^2 mod 2 = x * x
    auto f2 = factor_mod_prime(ip({0, 0, 1}), 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == ModPoly(2, {0, 1}));
    CHECK(f2[0].second == 2);

    CHECK_THROWS(factor_mod_prime(ip({1, 0, 3}), 3));  // p | lc
}

TEST_CASE("factor_mod_prime: multiply-back (random)") {
    auto rng = test_rng(111);
    const std::uint64_t primes[] = {2, 3, 5, 7, 13};
    for (int t = 0; t < 250; ++t) {
        IntPoly f = random_int_poly(rng, 1 + t % 9, -20, 20);
        std::uint64_t p = primes[t % 5];
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
        auto facs = factor_mod_prime(f, p);
        ModPoly prod(p, {f.lc().get_ui()});  // careful below with negatives
        prod = ModPoly::from_int(IntPoly(std::vector<Integer>{f.lc()}), p);
        for (const auto& [h, e] : facs) {
            CHECK(h.lc() == 1);
            for (unsigned i = 0; i < e; ++i) prod = prod * h;
        }
        CHECK(prod == ModPoly::from_int(f, p));
    }
}

TEST_CASE("factor_over_integers: pinned values") {
    auto f1 = factor_over_integers(ip({4, 0, 0, 0, 1}));  // x^4 + 4
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.unit == 1);
    CHECK(f1.factors[0].first == ip({2, -2, 1}));
    CHECK(f1.factors[1].first == ip({2, 2, 1}));

    auto f2 = factor_over_integers(ip({1, 0, 0, 0, 0, 0, 1}));  // x^6 + 1
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0].first == ip({1, 0, 1}));
    CHECK(f2.factors[1].first == ip({1, 0, -1, 0, 1}));

    auto f3 = factor_over_integers(ip({1, 0, 0, 0, 1}));  // x^4 + 1 irreducible
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first == ip({1, 0, 0, 0, 1}));
    CHECK(f3.factors[0].second == 1);
}

TEST_CASE("factor_over_integers: units, content, powers of x") {
    auto f = factor_over_integers(ip({0, 0, -12, -12}));  // -12 x^2 (x + 1)
    CHECK(f.unit == -12);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == ip({0, 1}));
    CHECK(f.factors[0].second == 2);
    CHECK(f.factors[1].first == ip({1, 1}));
    CHECK(f.expand() == ip({0, 0, -12, -12}).to_rat());

    auto c = factor_over_integers(ip({-7}));
    CHECK(c.unit == -7);
    CHECK(c.factors.empty());
}

TEST_CASE("factor_over_integers: multiply-back identity (random)") {
    auto rng = test_rng(222);
    for (int t = 0; t < 500; ++t) {
        IntPoly f = random_int_poly(rng, 1 + t % 12, -30, 30);
        auto fact = factor_over_integers(f);
        CHECK(fact.expand() == f.to_rat());
        for (const auto& [q, e] : fact.factors) {
            CHECK(q.content() == 1);
            CHECK(q.lc() > 0);
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("factor_over_integers: products with known structure (random)") {
    auto rng = test_rng(333);
    for (int t = 0; t < 120; ++t) {
        IntPoly a = random_int_poly(rng, 1 + t % 4, -8, 8);
        IntPoly b = random_int_poly(rng, 1 + (t / 2) % 4, -8, 8);
        IntPoly c = random_int_poly(rng, 1 + (t / 3) % 3, -5, 5);
        IntPoly prod = a * b * c * c;
        auto fact = factor_over_integers(prod);
        CHECK(fact.expand() == prod.to_rat());
        // degrees add up
        int total = 0;
        for (const auto& [q, e] : fact.factors) total += q.degree() * e;
        CHECK(total == prod.degree());
    }
}

TEST_CASE("oracle equivalence on degree <= 4 (random sample)") {
    auto rng = test_rng(444);
    std::uniform_int_distribution<long> coeff(-8, 8);
    int done = 0;
    while (done < 3000) {
        std::vector<Integer> c(5);
        for (auto& x : c) x = coeff(rng);
        IntPoly f(std::move(c));
        if (f.is_zero()) continue;
        ++done;
        auto mine = factor_over_integers(f);
        auto naive = naive_factor_deg4(f);
        REQUIRE(mine.expand() == f.to_rat());
        // compare factor multisets
        std::multiset<std::vector<Integer>> a, b;
        for (const auto& [q, e] : mine.factors)
            for (unsigned i = 0; i < e; ++i) a.insert(q.coeffs());
        for (const auto& q : naive.factors) b.insert(q.coeffs());
        CHECK(a == b);
    }
}

TEST_CASE("mod-p degree refinement (random)") {
    auto rng = test_rng(555);
    for (int t = 0; t < 100; ++t) {
        IntPoly f = random_int_poly(rng, 2 + t % 8, -9, 9);
        if (!is_squarefree(f.to_rat())) continue;
        IntPoly g = f.primitive_part();
        std::uint64_t p = choose_factorization_prime(g);
        auto zfacs = factor_over_integers(g);
        std::multiset<int> from_parts, whole;
        for (const auto& [q, e] : zfacs.factors)
            for (const auto& [h, m] : factor_mod_prime(q, p))
                for (unsigned i = 0; i < m * e; ++i) from_parts.insert(h.degree());
        for (const auto& [h, m] : factor_mod_prime(g, p))
            for (unsigned i = 0; i < m; ++i) whole.insert(h.degree());
        CHECK(from_parts == whole);
    }
}

TEST_CASE("is_irreducible_over_rationals") {
    CHECK(is_irreducible_over_rationals(ip({1, 0, 0, 0, 1})));
    CHECK(!is_irreducible_over_rationals(ip({4, 0, 0, 0, 1})));
    CHECK(is_irreducible_over_rationals(ip({5, 1})));
    CHECK(is_irreducible_over_rationals(ip({2, 0, 0, 0, 1})));   // x^4+2, Eisenstein
    CHECK(!is_irreducible_over_rationals(ip({1, 2, 1})));
    CHECK(!is_irreducible_over_rationals(ip({0, 1, 1})));
    CHECK_THROWS(is_irreducible_over_rationals(ip({3})));
    // rational polynomial variant: scaling does not matter
    RatPoly f({make_rational(1, 2), Rational(0), make_rational(1, 2)});
    CHECK(is_irreducible_over_rationals(f));  // (x^2+1)/2
}

TEST_CASE("is_irreducible agrees with naive oracle (random, degree <= 4)") {
    auto rng = test_rng(666);
    std::uniform_int_distribution<long> coeff(-8, 8);
    int done = 0;
    while (done < 2000) {
        std::vector<Integer> c(5);
        for (auto& x : c) x = coeff(rng);
        IntPoly f(std::move(c));
        if (f.degree() < 1) continue;
        ++done;
        CHECK(is_irreducible_over_rationals(f) == naive_is_irreducible(f));
    }
}

TEST_CASE("determinism: repeated runs give identical output") {
    IntPoly f = ip({-6, 1, 7, -3, 0, 2, 5});
    auto a = factor_over_integers(f);
    auto b = factor_over_integers(f);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}
