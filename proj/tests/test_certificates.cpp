#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "superirr/certificates.hpp"
#include "superirr/zfactor.hpp"

using namespace superirr;
using namespace superirr::testing;

static IntPoly binom4(long a, long b) { return IntPoly({b, 0, 0, 0, a}); }

TEST_CASE("karpilovsky_irreducible") {
    CHECK(!karpilovsky_irreducible(Rational(-4), 1));  // x^4 + 4 reducible
    CHECK(karpilovsky_irreducible(Rational(-1), 1));   // x^4 + 1 irreducible
    CHECK(!karpilovsky_irreducible(Rational(16), 1));  // x^4 - 16 reducible
    CHECK(karpilovsky_irreducible(Rational(-2), 1));
    CHECK(karpilovsky_irreducible(Rational(-1), 2));   // x^8 + 1
    CHECK(!karpilovsky_irreducible(Rational(64), 3));  // x^12 - 64 = (x^6-8)(x^6+8)
    CHECK_THROWS(karpilovsky_irreducible(Rational(0), 1));
}

TEST_CASE("karpilovsky matches the factor oracle on x^4 - c") {
    for (long c = -60; c <= 60; ++c) {
        if (c == 0) continue;
        CHECK(karpilovsky_irreducible(Rational(c), 1) ==
              is_irreducible_over_rationals(binom4(1, -c)));
    }
    // and on x^8 - c
    for (long c = -35; c <= 35; ++c) {
        if (c == 0) continue;
        std::vector<Integer> v(9, Integer(0));
        v[0] = -c;
        v[8] = 1;
        CHECK(karpilovsky_irreducible(Rational(c), 2) ==
              is_irreducible_over_rationals(IntPoly(v)));
    }
}

TEST_CASE("residue_rule") {
    CHECK(residue_rule(Integer(1)) == "descent-x4-y4");
    CHECK(residue_rule(Integer(2)) == "descent-x4-2y4");
    CHECK(residue_rule(Integer(7)) == "residue-p-mod16");
    CHECK(residue_rule(Integer(11)) == "residue-p-mod16");
    CHECK(residue_rule(Integer(6)) == "residue-2p-mod8");     // 2*3, 3 = 3 mod 8
    CHECK(residue_rule(Integer(26)) == "residue-2p-mod8");    // 2*13, 13 = 5 mod 8
    CHECK(residue_rule(Integer(12)) == "residue-4p-negp-mod16");   // 4*3
    CHECK(residue_rule(Integer(-3)) == "residue-4p-negp-mod16");
    CHECK(residue_rule(Integer(-11)) == "residue-4p-negp-mod16");
    CHECK(residue_rule(Integer(-13)) == "residue-4p-negp-mod16");
    CHECK(!residue_rule(Integer(3)).has_value());
    CHECK(!residue_rule(Integer(5)).has_value());
    CHECK(!residue_rule(Integer(16)).has_value());
    CHECK(!residue_rule(Integer(-7)).has_value());
    CHECK_THROWS(residue_rule(Integer(0)));
}

TEST_CASE("diophantine_search pinned solutions") {
    auto s3 = diophantine_search(Integer(3), Integer(10));
    REQUIRE(s3.has_value());
    CHECK(s3->x == 1);
    CHECK(s3->y == 1);
    CHECK(s3->z == 2);

    auto s5 = diophantine_search(Integer(5), Integer(10));
    REQUIRE(s5.has_value());
    CHECK(s5->x == 1);
    CHECK(s5->y == 2);
    CHECK(s5->z == 9);

    CHECK(!diophantine_search(Integer(1), Integer(200)).has_value());
    CHECK(!diophantine_search(Integer(2), Integer(200)).has_value());
    CHECK_THROWS(diophantine_search(Integer(0), Integer(10)));
}

TEST_CASE("certified residue classes have no small Diophantine solutions") {
    for (long D = -60; D <= 60; ++D) {
        if (D == 0) continue;
        if (residue_rule(Integer(D)))
            CHECK(!diophantine_search(Integer(D), Integer(200)).has_value());
    }
}

TEST_CASE("legendre_necessary") {
    CHECK(!legendre_necessary(Integer(2), Integer(3)));
    CHECK(legendre_necessary(Integer(1), Integer(77)));
    CHECK(legendre_necessary(Integer(3), Integer(13)));
    CHECK(legendre_necessary(Integer(4), Integer(7)));   // square part stripped: (1, 7)
    CHECK_THROWS(legendre_necessary(Integer(2), Integer(4)));   // not coprime
    CHECK_THROWS(legendre_necessary(Integer(0), Integer(3)));
    // agreement with brute force on the original equation
    auto rng = test_rng(31);
    std::uniform_int_distribution<long> d(1, 40);
    int done = 0;
    while (done < 200) {
        long a = d(rng), b = d(rng);
        if (std::gcd(a, b) != 1) continue;
        ++done;
        bool solvable = false;
        for (long x = 0; x <= 40 && !solvable; ++x)
            for (long y = 0; y <= 40 && !solvable; ++y) {
                if (x == 0 && y == 0) continue;
                Integer v = Integer(a) * x * x + Integer(b) * y * y;
                if (auto z = exact_sqrt(v)) solvable = true;
            }
        if (solvable) CHECK(legendre_necessary(Integer(a), Integer(b)));
    }
}

TEST_CASE("certify: the certificate table") {
    CertifyOptions opts;
    auto expect_certified = [&](long b, const std::string& rule) {
        Certificate c = certify(binom4(1, b), opts);
        CHECK(c.status == CertStatus::Certified);
        REQUIRE(c.rule.has_value());
        CHECK(*c.rule == rule);
    };
    expect_certified(1, "descent-x4-y4");
    expect_certified(2, "descent-x4-2y4");
    expect_certified(7, "residue-p-mod16");
    expect_certified(6, "residue-2p-mod8");
    expect_certified(-3, "residue-4p-negp-mod16");

    Certificate c3 = certify(binom4(1, 3), opts);
    CHECK(c3.status == CertStatus::MethodInapplicable);
    REQUIRE(c3.triple.has_value());
    CHECK(c3.triple->x == 1);
    CHECK(c3.triple->y == 1);
    CHECK(c3.triple->z == 2);

    Certificate c5 = certify(binom4(1, 5), opts);
    CHECK(c5.status == CertStatus::MethodInapplicable);
    REQUIRE(c5.triple.has_value());
    CHECK(c5.triple->x == 1);
    CHECK(c5.triple->y == 2);
    CHECK(c5.triple->z == 9);

    Certificate c16 = certify(binom4(1, 16), opts);
    CHECK(c16.status == CertStatus::Unknown);
    CHECK(!c16.triple.has_value());
    CHECK(!c16.witness.has_value());
}

TEST_CASE("certify: reducible input, shape errors, nonmonic paths") {
    Certificate r = certify(binom4(1, -4), CertifyOptions{});  // x^4 - 4 reducible
    CHECK(r.status == CertStatus::MethodInapplicable);
    CHECK(!r.triple.has_value());

    CHECK_THROWS(certify(IntPoly({1, 1, 0, 0, 1}), CertifyOptions{}));  // not the shape
    CHECK_THROWS(certify(IntPoly({0, 0, 0, 0, 1}), CertifyOptions{}));  // b = 0
    CHECK_THROWS(certify(IntPoly({1, 0, 1}), CertifyOptions{}));        // degree 2

    Certificate leg = certify(binom4(2, 3), CertifyOptions{});  // 2 nonsquare mod 3
    CHECK(leg.status == CertStatus::Certified);
    CHECK(*leg.rule == "legendre");

    // negative leading coefficient is a unit: -x^4 - 7 behaves like x^4 + 7
    Certificate neg = certify(binom4(-1, -7), CertifyOptions{});
    CHECK(neg.status == CertStatus::Certified);
    CHECK(*neg.rule == "residue-p-mod16");

    // x^8 + 1: the 4k shape with k = 2
    std::vector<Integer> v(9, Integer(0));
    v[0] = 1;
    v[8] = 1;
    Certificate c8 = certify(IntPoly(v), CertifyOptions{});
    CHECK(c8.status == CertStatus::Certified);
    CHECK(*c8.rule == "descent-x4-y4");
}

TEST_CASE("certify: refutation by witness search") {
    // 4x^4 + 1 = (2x^2-2x+1)(2x^2+2x+1) is reducible -> inapplicable;
    // 3x^4 + 1 is irreducible, 3 is a QR mod 1 trivially -> no certificate;
    // D-path: D = 27, x^4 + 27 y^4 = z^2 has no small solutions;
    // witness search at the default box finds g with f(g) reducible? If not,
    // Unknown is the honest outcome. Pin the actual behavior:
    Certificate c = certify(binom4(3, 1), CertifyOptions{});
    CHECK((c.status == CertStatus::Unknown || c.status == CertStatus::Refuted));
    if (c.status == CertStatus::Refuted) {
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->verify(binom4(3, 1).to_rat()));
    }
    // determinism
    Certificate c2 = certify(binom4(3, 1), CertifyOptions{});
    CHECK(c.status == c2.status);
    CHECK(c.note == c2.note);
}
