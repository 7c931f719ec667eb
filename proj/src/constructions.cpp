#include "superirr/constructions.hpp"

#include <stdexcept>

#include "superirr/zfactor.hpp"

namespace superirr {

bool SubstitutionWitness::verify(const RatPoly& f) const {
    RatPoly comp = compose(f, substitution);
    if (divisor.degree() < 1 || divisor.degree() >= comp.degree()) return false;
    return divisor.to_rat() * cofactor.to_rat() * scalar == comp;
}

void require_verified(const SubstitutionWitness& w, const RatPoly& f) {
    if (!w.verify(f))
        throw std::logic_error("substitution witness failed its reconstruction check");
}

namespace {

// witness from a divisor known to divide f(g) over Q
SubstitutionWitness witness_from_divisor(const RatPoly& f, const RatPoly& g,
                                         const IntPoly& divisor_primitive) {
    RatPoly comp = compose(f, g);
    auto [scalar, comp_prim] = comp.split_integer();
    auto cof = try_exact_div(comp_prim, divisor_primitive);
    if (!cof)
        throw std::logic_error("construction: claimed divisor does not divide f(g)");
    SubstitutionWitness w{g, divisor_primitive, *cof, scalar};
    require_verified(w, f);
    return w;
}

}  // namespace

SubstitutionWitness naive_substitution(const IntPoly& f, unsigned k) {
    if (f.degree() < 1) throw std::invalid_argument("naive_substitution: deg f >= 1 required");
    if (f.degree() + static_cast<int>(k) < 2)
        throw std::invalid_argument(
            "naive_substitution: deg f + k >= 2 required (the linear k = 0 case "
            "has no nontrivial factorization)");
    IntPoly g = IntPoly::monomial(Integer(1), k) * f + IntPoly::x();
    if (g.degree() != f.degree() + static_cast<int>(k))
        throw std::logic_error("naive_substitution: unexpected degree collapse");
    return witness_from_divisor(f.to_rat(), g.to_rat(), f.primitive_part());
}

SubstitutionWitness field_substitution(const RatPoly& f) {
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("field_substitution: deg f >= 2 required");
    if (!f.is_monic()) throw std::invalid_argument("field_substitution: f must be monic");
    if (f.coeff(0) == 0) throw std::invalid_argument("field_substitution: f(0) != 0 required");
    if (!is_irreducible_over_rationals(f))
        throw std::invalid_argument("field_substitution: f must be irreducible");

    RatPoly h = reversal(f);
    // g = (1 - h)/x; exact since h(0) = lc(f) = 1
    RatPoly one_minus_h = RatPoly::one() - h;
    auto [g, rem] = divrem(one_minus_h, RatPoly::x());
    if (!rem.is_zero() || g.degree() != d - 1)
        throw std::logic_error("field_substitution: g is not a degree d-1 polynomial");
    IntPoly hz = h.split_integer().second;
    SubstitutionWitness w = witness_from_divisor(f, g, hz);
    if (w.divisor.degree() != d)
        throw std::logic_error("field_substitution: divisor degree != d");
    return w;
}

SubstitutionWitness domain_substitution(const IntPoly& f) {
    int d = f.degree();
    if (d < 3) throw std::invalid_argument("domain_substitution: deg f >= 3 required");
    if (!is_irreducible_over_rationals(f))
        throw std::invalid_argument("domain_substitution: f must be irreducible");

    const Integer& ad = f.lc();
    Rational sigma = make_rational(-f.coeff(d - 1), Integer(d - 1) * ad);
    Integer A = Integer(d - 1) * Integer(d - 1) * ad * ad;

    // H(x) = x^d f(1/x + sigma) = reversal of f(x + sigma)
    RatPoly shifted = shift_scale(f.to_rat(), sigma, Rational(1));
    RatPoly H = reversal(shifted);
    if (H.degree() != d) throw std::logic_error("domain_substitution: deg H != d");

    // G = (1 - H/ad)/x + sigma
    RatPoly top = RatPoly::one() - H * make_rational(Integer(1), ad);
    auto [G, rem] = divrem(top, RatPoly::x());
    if (!rem.is_zero()) throw std::logic_error("domain_substitution: H(0) != ad");
    G = G + RatPoly::constant(sigma);

    // rescale x -> A x
    RatPoly Ax(std::vector<Rational>{Rational(0), Rational(A)});
    RatPoly Gt = compose(G, Ax);
    RatPoly Ht = compose(H, Ax);

    if (!Gt.is_integral())
        throw std::logic_error("domain_substitution: rescaled substitution is not integral");
    if (Gt.degree() != d - 1)
        throw std::logic_error("domain_substitution: deg G != d - 1");
    IntPoly divisor = Ht.split_integer().second;

    RatPoly comp = compose(f.to_rat(), Gt);
    IntPoly comp_z = comp.to_int();  // integer f composed with integer G
    auto cof = try_exact_div(comp_z, divisor);
    if (!cof)
        throw std::logic_error("domain_substitution: primitive part of H(Ax) does not "
                               "divide f(G(Ax)) over Z");
    SubstitutionWitness w{Gt, divisor, *cof, Rational(1)};
    require_verified(w, f.to_rat());
    if (w.divisor.degree() != d)
        throw std::logic_error("domain_substitution: divisor degree != d");
    return w;
}

SubstitutionWitness even_split_substitution(const RatPoly& f) {
    int deg = f.degree();
    if (deg < 4 || deg % 2 != 0)
        throw std::invalid_argument(
            "even_split_substitution: degree must be even and >= 4");
    Rational a = f.coeff(1);
    if (a == 0)
        throw std::invalid_argument("even_split_substitution: linear coefficient is zero");
    for (int i = 3; i < deg; i += 2)
        if (f.coeff(i) != 0)
            throw std::invalid_argument(
                "even_split_substitution: nonzero odd coefficient above degree 1");

    int N = deg / 2;
    // F with f = a x + F(x^2)
    std::vector<Rational> Fc(N + 1);
    for (int i = 0; i <= N; ++i) Fc[i] = f.coeff(2 * i);
    RatPoly F(std::move(Fc));
    RatPoly g = F * (Rational(-1) / a);
    if (g.degree() != N) throw std::logic_error("even_split_substitution: deg g != N");

    RatPoly comp = compose(f, g);
    auto [scalar, comp_prim] = comp.split_integer();
    Factorization fact = factor_over_integers(comp_prim);
    std::size_t total = 0;
    for (const auto& [q, e] : fact.factors) total += e;
    if (total < 2)
        throw std::logic_error("even_split_substitution: composition did not split");
    // prefer the factor of degree 2N = deg f, the norm of the linear branch
    const IntPoly* pick = nullptr;
    for (const auto& [q, e] : fact.factors)
        if (q.degree() == deg) { pick = &q; break; }
    if (!pick) pick = &fact.factors.front().first;
    return witness_from_divisor(f, g, *pick);
}

std::optional<SubstitutionWitness> quartic_witness(const RatPoly& f) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_witness: need degree 4");
    if (!f.is_monic()) throw std::invalid_argument("quartic_witness: f must be monic");
    Rational a = f.coeff(3), b = f.coeff(2), c = f.coeff(1);
    Rational criterion = Rational(8) * c - Rational(4) * a * b + a * a * a;
    if (criterion == 0) return std::nullopt;

    Rational shift = -a / Rational(4);
    RatPoly depressed = shift_scale(f, shift, Rational(1));  // f(x - a/4)
    if (depressed.coeff(3) != 0)
        throw std::logic_error("quartic_witness: depression failed");
    SubstitutionWitness inner = even_split_substitution(depressed);
    // f(g(x) + shift) = depressed(g(x))
    RatPoly g = inner.substitution + RatPoly::constant(shift);
    SubstitutionWitness w{g, inner.divisor, inner.cofactor, inner.scalar};
    require_verified(w, f);
    return w;
}

SubstitutionWitness scale_witness(const SubstitutionWitness& w, const RatPoly& f,
                                  const Rational& a) {
    if (a == 0) throw std::invalid_argument("scale_witness: a must be nonzero");
    Rational an(1);
    for (int i = 0; i < f.degree(); ++i) an *= a;
    SubstitutionWitness out{w.substitution * a, w.divisor, w.cofactor, w.scalar * an};
    require_verified(out, shift_scale(f, Rational(0), a));
    return out;
}

}  // namespace superirr
