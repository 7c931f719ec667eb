#pragma once

// Deciding 2-superirreducibility for binomial-shape inputs a x^{4k} + b:
// irreducibility by the binomial criterion, certification through descent
// and residue-class rules or the Legendre non-residue condition, and bounded
// Diophantine falsification when no rule applies.

#include <cstdint>
#include <optional>
#include <string>

#include "superirr/bigpoly.hpp"
#include "superirr/constructions.hpp"

namespace superirr {

enum class CertStatus { Certified, Refuted, MethodInapplicable, Unknown };

std::string to_string(CertStatus s);

// Rule identifiers:
//   descent-x4-y4       X^4 +  Y^4 = Z^2 has no nontrivial solutions (D = 1)
//   descent-x4-2y4      X^4 + 2Y^4 = Z^2 has no nontrivial solutions (D = 2)
//   residue-p-mod16     D = p prime, p = 7 or 11 (mod 16)
//   residue-2p-mod8     D = 2p, p prime, p = +-3 (mod 8)
//   residue-4p-negp-mod16   D = 4p or -p, p prime, p = 3, 11 or 13 (mod 16)
//   legendre            a nonresidue mod b or b nonresidue mod a (coprime a, b)
struct DiophantineTriple {
    Integer x, y, z;  // x^4 + D y^4 = z^2, all nonzero
};

struct SearchBounds {
    Integer diophantine_bound;
    long witness_coeff_bound = 0;
    long witness_denom_bound = 0;
};

struct Certificate {
    IntPoly input;
    CertStatus status = CertStatus::Unknown;
    std::optional<std::string> rule;
    std::optional<DiophantineTriple> triple;
    std::optional<SubstitutionWitness> witness;
    SearchBounds bounds;
    Integer dioph_constant;  // the D actually searched (monic-equivalent form)
    std::string note;
};

// x^{4k} - c reducibility test: reducible over Q iff -4c is a rational
// fourth power or c is a p-th power for some prime p dividing 4k.
// Returns true iff x^{4k} - c is irreducible. c != 0 required.
bool karpilovsky_irreducible(const Rational& c, unsigned k);

// First matching certified class for x^4 + D (and the 4k-th power families),
// or nullopt. D != 0.
std::optional<std::string> residue_rule(const Integer& D);

// Smallest nontrivial solution of X^4 + D Y^4 = Z^2 with coprime
// 1 <= x, y <= bound, ordered by (max(x, y), x, y); exact square testing.
std::optional<DiophantineTriple> diophantine_search(const Integer& D, const Integer& bound);

// Necessary condition for a x^2 + b y^2 = z^2 to have a nontrivial solution:
// true iff a is a square mod |b| AND b is a square mod |a|, after removing
// square parts. Requires a, b nonzero and coprime. A false return certifies
// nonexistence of solutions.
bool legendre_necessary(const Integer& a, const Integer& b);

struct CertifyOptions {
    Integer diophantine_bound{200};
    long witness_coeff_bound = 2;
    long witness_denom_bound = 2;
};

// Decision pipeline for f = a x^{4k} + b (shape detected syntactically).
Certificate certify(const IntPoly& f, const CertifyOptions& opts);
Certificate certify(const IntPoly& f, const Integer& search_bound);

}  // namespace superirr
