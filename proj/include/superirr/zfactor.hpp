#pragma once

// Complete factorization over Z (and hence Q): squarefree decomposition,
// factorization mod p, Hensel lifting past the Mignotte bound, and subset
// recombination. Deterministic for a fixed input: the equal-degree splitting
// RNG is seeded from a digest of the polynomial and the prime.

#include <cstdint>
#include <vector>

#include "superirr/bigpoly.hpp"
#include "superirr/modpoly.hpp"

namespace superirr {

struct Factorization {
    Rational unit;
    std::vector<std::pair<IntPoly, unsigned>> factors;  // primitive irreducible, lc > 0

    // unit * prod factor^multiplicity, for checking the reconstruction invariant
    RatPoly expand() const;
};

// Complete factorization mod p; requires p prime with p not dividing lc(f).
std::vector<std::pair<ModPoly, unsigned>> factor_mod_prime(const IntPoly& f,
                                                           std::uint64_t p);

// Factorization of a nonzero integer polynomial, factors sorted by
// (degree, coefficient sequence).
Factorization factor_over_integers(const IntPoly& f);

// True iff the primitive integer form of f is irreducible over Q.
// deg f >= 1 required. Uses sound shortcuts (mod-p degree analysis) before
// falling back to the full factorizer.
bool is_irreducible_over_rationals(const RatPoly& f);
bool is_irreducible_over_rationals(const IntPoly& f);

// Smallest prime >= 3 not dividing lc(f) with f squarefree mod p
// (f must be squarefree over Z).
std::uint64_t choose_factorization_prime(const IntPoly& f);

}  // namespace superirr
