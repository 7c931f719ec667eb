#pragma once

// The trinomial family f_k = x^{2k+1} + 2x + 1: discriminant identity,
// squaring in the order Z[theta]/(f_k), the mod-4 congruence obstruction,
// and direct bounded verification of weak 2-superirreducibility.

#include <cstdint>
#include <vector>

#include "superirr/bigpoly.hpp"

namespace superirr {

// x^{2k+1} + 2x + 1; k >= 2.
IntPoly trinomial(unsigned k);

// (-1)^k ((2k+1)^{2k+1} + 2^{2k+1} (2k)^{2k}); checked against the
// resultant-based discriminant and for oddness before returning.
Integer trinomial_disc(unsigned k);

struct OrderElement {
    unsigned k;
    std::vector<Integer> coords;  // length 2k+1, power basis 1, theta, ...
};

// coordinates of (sum coords[i] theta^i)^2 reduced by
// theta^{2k+j} = -2 theta^j - theta^{j-1}.
OrderElement square_in_order(const OrderElement& a);

struct CongruenceReport {
    unsigned k = 0;
    unsigned modulus = 4;
    std::uint64_t vectors_checked = 0;        // 4^{2k+1} - 2^{2k+1}
    std::vector<std::vector<int>> violations;  // offending coordinate vectors
    bool passed() const { return violations.empty(); }
};

// Enumerates all primitive coordinate vectors mod 4. For each whose square
// is 0 mod 4 in every coordinate of index >= 2 (the candidates for squaring
// to M theta + N), checks that the theta coefficient is even and the
// constant coefficient is odd; with M | N that is the contradiction ruling
// out genuine solutions. 2 <= k <= 5.
CongruenceReport congruence_verify(unsigned k, unsigned jobs = 0);

struct WeakCheckCounterexample {
    Integer a, b;
    unsigned power;  // the j in a x^j + b
};

struct WeakCheckReport {
    unsigned k = 0;
    Integer bound;
    std::uint64_t pairs_checked = 0;
    std::vector<WeakCheckCounterexample> counterexamples;
    bool passed() const { return counterexamples.empty(); }
};

// For a in [-bound, bound] \ {0}, b in [-bound, bound]: f_k(a x^2 + b) and
// f_k(a x + b) must be irreducible over Q.
WeakCheckReport weak_check(unsigned k, const Integer& bound, unsigned jobs = 0);

}  // namespace superirr
