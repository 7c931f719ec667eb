#include "superirr/certificates.hpp"

#include <stdexcept>

#include "superirr/search.hpp"
#include "superirr/zfactor.hpp"

namespace superirr {

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::Refuted: return "Refuted";
        case CertStatus::MethodInapplicable: return "MethodInapplicable";
        case CertStatus::Unknown: return "Unknown";
    }
    return "?";
}

bool karpilovsky_irreducible(const Rational& c, unsigned k) {
    if (c == 0) throw std::invalid_argument("karpilovsky_irreducible: c must be nonzero");
    if (k == 0) throw std::invalid_argument("karpilovsky_irreducible: k must be positive");
    if (rational_is_nth_power(Rational(-4) * c, 4)) return false;
    // primes dividing 4k: 2 plus the odd prime divisors of k
    if (rational_is_nth_power(c, 2)) return false;
    unsigned rest = k;
    for (unsigned p = 3; p * p <= rest; p += 2) {
        if (rest % p) continue;
        if (rational_is_nth_power(c, p)) return false;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 2 && rational_is_nth_power(c, rest)) return false;
    return true;
}

namespace {

unsigned long mod_abs(const Integer& v, unsigned long m) {
    Integer r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return r.get_ui();
}

bool in(unsigned long v, std::initializer_list<unsigned long> set) {
    for (auto s : set)
        if (v == s) return true;
    return false;
}

}  // namespace

std::optional<std::string> residue_rule(const Integer& D) {
    if (D == 0) throw std::invalid_argument("residue_rule: D must be nonzero");
    if (D == 1) return "descent-x4-y4";
    if (D == 2) return "descent-x4-2y4";
    if (D > 0 && is_prime(D) && in(mod_abs(D, 16), {7, 11})) return "residue-p-mod16";
    if (D > 0 && D % 2 == 0 && is_prime(D / 2) && in(mod_abs(D / 2, 8), {3, 5}))
        return "residue-2p-mod8";
    if (D > 0 && D % 4 == 0 && is_prime(D / 4) && in(mod_abs(D / 4, 16), {3, 11, 13}))
        return "residue-4p-negp-mod16";
    if (D < 0 && is_prime(-D) && in(mod_abs(-D, 16), {3, 11, 13}))
        return "residue-4p-negp-mod16";
    return std::nullopt;
}

std::optional<DiophantineTriple> diophantine_search(const Integer& D, const Integer& bound) {
    if (D == 0) throw std::invalid_argument("diophantine_search: D must be nonzero");
    if (bound < 1) throw std::invalid_argument("diophantine_search: bound must be >= 1");
    auto try_pair = [&](const Integer& x, const Integer& y) -> std::optional<DiophantineTriple> {
        Integer g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        if (g != 1) return std::nullopt;
        Integer v = x * x * x * x + D * y * y * y * y;
        if (v <= 0) return std::nullopt;
        if (auto z = exact_sqrt(v)) return DiophantineTriple{x, y, *z};
        return std::nullopt;
    };
    // ordered by (max(x, y), x, y)
    for (Integer m = 1; m <= bound; ++m) {
        for (Integer x = 1; x < m; ++x)
            if (auto hit = try_pair(x, m)) return hit;
        for (Integer y = 1; y <= m; ++y)
            if (auto hit = try_pair(m, y)) return hit;
    }
    return std::nullopt;
}

namespace {

// squarefree kernel, sign preserved; trial division is fine at desk scale
Integer squarefree_kernel(const Integer& v) {
    Integer n = v < 0 ? Integer(-v) : v;
    Integer out(1);
    for (Integer p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    out *= n;  // leftover prime
    return v < 0 ? -out : out;
}

bool is_square_mod(const Integer& r0, const Integer& m0) {
    Integer m = m0 < 0 ? Integer(-m0) : m0;
    if (m <= 1) return true;
    Integer r;
    mpz_mod(r.get_mpz_t(), r0.get_mpz_t(), m.get_mpz_t());
    for (Integer t = 0; t * 2 <= m; ++t)
        if ((t * t) % m == r) return true;
    return false;
}

}  // namespace

bool legendre_necessary(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("legendre_necessary: arguments must be nonzero");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw std::invalid_argument("legendre_necessary: arguments must be coprime");
    Integer a0 = squarefree_kernel(a);
    Integer b0 = squarefree_kernel(b);
    return is_square_mod(a0, b0) && is_square_mod(b0, a0);
}

Certificate certify(const IntPoly& f, const CertifyOptions& opts) {
    Certificate cert;
    cert.input = f;
    cert.bounds = {opts.diophantine_bound, opts.witness_coeff_bound,
                   opts.witness_denom_bound};

    // shape a x^{4k} + b
    int deg = f.degree();
    bool shape = deg >= 4 && deg % 4 == 0 && f.coeff(0) != 0;
    if (shape)
        for (int i = 1; i < deg && shape; ++i)
            if (f.coeff(i) != 0) shape = false;
    if (!shape)
        throw std::invalid_argument("certify: input must have the shape a*x^(4k) + b");

    IntPoly work = f.lc() < 0 ? -f : f;  // the sign is a unit
    if (f.lc() < 0) cert.note = "input negated (unit factor); ";
    unsigned k = static_cast<unsigned>(deg / 4);
    Integer a = work.lc();
    Integer b = work.coeff(0);

    // (1) irreducibility
    bool irreducible = (a == 1) ? karpilovsky_irreducible(Rational(-b), k)
                                : is_irreducible_over_rationals(work);
    if (!irreducible) {
        cert.status = CertStatus::MethodInapplicable;
        cert.note += (a == 1)
                         ? "reducible over Q by the binomial criterion; "
                           "2-superirreducibility requires an irreducible input"
                         : "reducible over Q by the factor oracle; "
                           "2-superirreducibility requires an irreducible input";
        return cert;
    }

    // (2) monic residue classes
    if (a == 1) {
        if (auto rule = residue_rule(b)) {
            cert.status = CertStatus::Certified;
            cert.rule = *rule;
            cert.note += "2-superirreducible over Q (hence over Z)";
            return cert;
        }
    }

    // (3) Legendre non-residue certificate (coprime nonmonic inputs)
    if (a != 1) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g == 1 && !legendre_necessary(a, b)) {
            cert.status = CertStatus::Certified;
            cert.rule = "legendre";
            cert.note += "2-superirreducible over Z (nonresidue condition)";
            return cert;
        }
    }

    // (4) Diophantine falsification of the norm obstruction.
    // For nonmonic input use the monic-equivalent constant from the unit
    // scaling x -> x/a over Q: a x^{4k} + b ~ x^{4k} + a^{4k-1} b.
    Integer D = b;
    if (a != 1) {
        Integer apow;
        mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), 4 * k - 1);
        D = apow * b;
    }
    cert.dioph_constant = D;
    if (auto triple = diophantine_search(D, opts.diophantine_bound)) {
        if (triple->x * triple->y * triple->z == 0 ||
            triple->x * triple->x * triple->x * triple->x +
                    D * triple->y * triple->y * triple->y * triple->y !=
                triple->z * triple->z)
            throw std::logic_error("certify: Diophantine witness failed verification");
        cert.status = CertStatus::MethodInapplicable;
        cert.triple = *triple;
        cert.note += "norm obstruction fails: X^4 + D Y^4 = Z^2 has a nontrivial solution";
        return cert;
    }

    // (5) bounded search for a reducing substitution
    SearchReport report = search_rational_witness(
        work.to_rat(), opts.witness_coeff_bound, opts.witness_denom_bound);
    if (!report.witnesses.empty()) {
        const SubstitutionWitness& w = report.witnesses.front();
        require_verified(w, work.to_rat());
        cert.status = CertStatus::Refuted;
        cert.witness = w;
        cert.note += "reducing substitution found";
        return cert;
    }

    cert.status = CertStatus::Unknown;
    cert.note += "no rule matched and bounded searches were inconclusive";
    return cert;
}

Certificate certify(const IntPoly& f, const Integer& search_bound) {
    CertifyOptions opts;
    opts.diophantine_bound = search_bound;
    return certify(f, opts);
}

}  // namespace superirr
