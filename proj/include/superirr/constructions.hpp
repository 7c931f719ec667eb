#pragma once

// Explicit reducing substitutions: given f, produce g together with a
// verified nontrivial factorization of f(g(x)). Every constructor checks its
// own output by exact multiplication before returning; an algebra slip
// throws instead of leaking a bogus witness.

#include <optional>

#include "superirr/bigpoly.hpp"

namespace superirr {

struct SubstitutionWitness {
    RatPoly substitution;  // g
    IntPoly divisor;       // primitive, positive leading coefficient
    IntPoly cofactor;
    Rational scalar;       // scalar * divisor * cofactor = f(g) exactly

    // checks the reconstruction identity and 1 <= deg divisor < deg f(g)
    bool verify(const RatPoly& f) const;
};

// Throws std::logic_error unless w.verify(f) holds.
void require_verified(const SubstitutionWitness& w, const RatPoly& f);

// g = x^k f + x, so f | f(g). Needs deg f + k >= 2; the (deg 1, k = 0) corner
// degenerates (the cofactor would be constant).
SubstitutionWitness naive_substitution(const IntPoly& f, unsigned k);

// Monic irreducible f of degree d >= 2 with f(0) != 0 over a field:
// h = x^d f(1/x), g = (1 - h)/x; h divides f(g). The divisor has degree d.
SubstitutionWitness field_substitution(const RatPoly& f);

// Irreducible f over Z of degree d >= 3: the shift-and-rescale construction
// with A = (d-1)^2 lc(f)^2 producing an integer substitution of degree d-1
// and a factorization over Z whose divisor has degree d.
SubstitutionWitness domain_substitution(const IntPoly& f);

// f = a x + F(x^2) of degree 2N >= 4 with a != 0 and no other odd terms:
// g = -F(x)/a makes f(g) split over Q.
SubstitutionWitness even_split_substitution(const RatPoly& f);

// Monic irreducible quartic: depress the cube term; when 8c - 4ab + a^3 != 0
// the depressed polynomial has the even-split shape and the witness shifts
// back. Returns nullopt when the criterion value vanishes.
std::optional<SubstitutionWitness> quartic_witness(const RatPoly& f);

// Transport: if w witnesses f, then a*g witnesses shift_scale(f, 0, a).
SubstitutionWitness scale_witness(const SubstitutionWitness& w, const RatPoly& f,
                                  const Rational& a);

}  // namespace superirr
