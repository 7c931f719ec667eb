#include "superirr/numfield.hpp"

#include <sstream>
#include <stdexcept>

#include "superirr/zfactor.hpp"

namespace superirr {

NumberFieldPtr NumberField::create(IntPoly modulus) {
    if (modulus.degree() < 1)
        throw std::invalid_argument("NumberField: modulus must be nonconstant");
    if (modulus.lc() != 1) throw std::invalid_argument("NumberField: modulus must be monic");
    if (!is_irreducible_over_rationals(modulus))
        throw std::invalid_argument("NumberField: modulus must be irreducible");
    return NumberFieldPtr(new NumberField(std::move(modulus)));
}

NumberFieldElement::NumberFieldElement(NumberFieldPtr field, RatPoly value)
    : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("NumberFieldElement: null field");
    RatPoly reduced = divrem(value, field_->modulus_rat()).second;
    coords_.assign(field_->degree(), Rational(0));
    for (int i = 0; i <= reduced.degree(); ++i) coords_[i] = reduced.coeff(i);
}

NumberFieldElement NumberFieldElement::zero(NumberFieldPtr field) {
    return NumberFieldElement(std::move(field), RatPoly::zero());
}

NumberFieldElement NumberFieldElement::from_rational(NumberFieldPtr field, Rational r) {
    return NumberFieldElement(std::move(field), RatPoly::constant(std::move(r)));
}

NumberFieldElement NumberFieldElement::generator(NumberFieldPtr field) {
    return NumberFieldElement(std::move(field), RatPoly::x());
}

RatPoly NumberFieldElement::to_poly() const { return RatPoly(coords_); }

bool NumberFieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool NumberFieldElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

namespace {
void require_same_field(const NumberFieldElement& u, const NumberFieldElement& v) {
    if (u.field().get() != v.field().get() &&
        !(u.field()->modulus() == v.field()->modulus()))
        throw std::invalid_argument("field mismatch");
}
}  // namespace

bool NumberFieldElement::operator==(const NumberFieldElement& rhs) const {
    require_same_field(*this, rhs);
    return coords_ == rhs.coords_;
}

NumberFieldElement NumberFieldElement::operator-() const {
    return NumberFieldElement(field_, -to_poly());
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& rhs) const {
    require_same_field(*this, rhs);
    return NumberFieldElement(field_, to_poly() + rhs.to_poly());
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& rhs) const {
    require_same_field(*this, rhs);
    return NumberFieldElement(field_, to_poly() - rhs.to_poly());
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& rhs) const {
    require_same_field(*this, rhs);
    return NumberFieldElement(field_, to_poly() * rhs.to_poly());
}

NumberFieldElement NumberFieldElement::operator*(const Rational& s) const {
    return NumberFieldElement(field_, to_poly() * s);
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    auto e = ext_gcd(to_poly(), field_->modulus_rat());
    if (e.g.degree() != 0)
        throw std::logic_error("inverse: element not coprime to the modulus");
    return NumberFieldElement(field_, e.u);
}

std::string NumberFieldElement::to_string() const {
    std::ostringstream out;
    out << "(" << to_poly().to_string() << ")";
    return out.str();
}

NumberFieldElement field_mul(const NumberFieldElement& u, const NumberFieldElement& v) {
    return u * v;
}

Rational norm(const NumberFieldElement& u) {
    if (u.is_zero()) return Rational(0);
    return resultant(u.field()->modulus_rat(), u.to_poly());
}

namespace {

// Polynomials with NumberFieldElement coefficients; just enough for the gcd
// step of the norm method.
using FPoly = std::vector<NumberFieldElement>;

void fp_normalize(FPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

FPoly fp_rem(FPoly f, const FPoly& g) {
    NumberFieldElement inv = g.back().inverse();
    fp_normalize(f);
    while (f.size() >= g.size()) {
        NumberFieldElement q = f.back() * inv;
        std::size_t off = f.size() - g.size();
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            f[off + i] = f[off + i] - q * g[i];
        f.pop_back();
        fp_normalize(f);
    }
    return f;
}

FPoly fp_gcd(FPoly a, FPoly b) {
    fp_normalize(a);
    fp_normalize(b);
    while (!b.empty()) {
        FPoly r = fp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Res_y(modulus(y), (t - s*y)^2 - U(y)) as a polynomial in t, computed by
// evaluation at 2d+1 points and Lagrange interpolation.
RatPoly shifted_norm(const NumberFieldPtr& field, const RatPoly& U, long s) {
    int d = field->degree();
    int points = 2 * d + 1;
    std::vector<Rational> xs(points), ys(points);
    for (int j = 0; j < points; ++j) {
        long t = (j % 2 == 0) ? j / 2 : -(j / 2 + 1);  // 0, -1, 1, -2, 2, ...
        xs[j] = Rational(t);
        RatPoly lin(std::vector<Rational>{Rational(t), Rational(-s)});  // t - s*y
        RatPoly in_y = lin * lin - U;
        ys[j] = in_y.is_zero() ? Rational(0) : resultant(field->modulus_rat(), in_y);
    }
    RatPoly acc;
    for (int j = 0; j < points; ++j) {
        RatPoly basis = RatPoly::one();
        Rational denom(1);
        for (int k = 0; k < points; ++k) {
            if (k == j) continue;
            basis = basis * RatPoly(std::vector<Rational>{-xs[k], Rational(1)});
            denom *= xs[j] - xs[k];
        }
        acc = acc + basis * (ys[j] / denom);
    }
    return acc;
}

}  // namespace

std::optional<NumberFieldElement> is_square(const NumberFieldElement& u) {
    const NumberFieldPtr& field = u.field();
    int d = field->degree();
    if (u.is_zero()) return NumberFieldElement::zero(field);

    RatPoly U = u.to_poly();
    // shift search order 0, 1, -1, 2, -2, ...; only finitely many shifts can
    // make the norm fail squarefreeness
    for (long step = 0; step < 2000; ++step) {
        long s = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
        RatPoly nrm = shifted_norm(field, U, s);
        if (nrm.degree() != 2 * d)
            throw std::logic_error("is_square: norm degree mismatch");
        if (!is_squarefree(nrm)) continue;

        auto fact = factor_over_integers(nrm.split_integer().second);
        // a degree-d factor corresponds to a linear factor of
        // (t - s*alpha)^2 - u over the field
        for (const auto& [q, e] : fact.factors) {
            if (q.degree() != d) continue;
            NumberFieldElement alpha = NumberFieldElement::generator(field);
            NumberFieldElement s_alpha = alpha * Rational(s);
            FPoly quad = {s_alpha * s_alpha - u, s_alpha * Rational(-2),
                          NumberFieldElement::from_rational(field, Rational(1))};
            FPoly qf;
            for (int i = 0; i <= q.degree(); ++i)
                qf.push_back(NumberFieldElement::from_rational(field, Rational(q.coeff(i))));
            FPoly g = fp_gcd(qf, quad);
            if (g.size() != 2) continue;  // pairs with the other conjugate branch
            // root of the shifted quadratic, then undo the shift
            NumberFieldElement rho = -(g[0] * g[1].inverse());
            NumberFieldElement gamma = rho - s_alpha;
            if (!((gamma * gamma) == u))
                throw std::logic_error("is_square: candidate root fails verification");
            NumberFieldElement other = -gamma;
            return other.coords() < gamma.coords() ? other : gamma;
        }
        return std::nullopt;
    }
    throw std::logic_error("is_square: no squarefree shift found");
}

std::optional<NumberFieldElement> quadratic_preimage(const NumberFieldPtr& field,
                                                     const RatPoly& g) {
    if (g.degree() != 2)
        throw std::invalid_argument("quadratic_preimage: g must be quadratic");
    const Rational b = g.coeff(2);
    const Rational c = g.coeff(1);
    const Rational d0 = g.coeff(0);
    // g(t) = alpha <=> t = (-c + sqrt(c^2 - 4 b d0 + 4 b alpha)) / (2b)
    NumberFieldElement alpha = NumberFieldElement::generator(field);
    NumberFieldElement disc =
        alpha * (Rational(4) * b) +
        NumberFieldElement::from_rational(field, c * c - Rational(4) * b * d0);
    auto root = is_square(disc);
    if (!root) return std::nullopt;
    NumberFieldElement t0 =
        (*root - NumberFieldElement::from_rational(field, c)) * (Rational(1) / (Rational(2) * b));
    NumberFieldElement val = t0 * t0 * b + t0 * c + NumberFieldElement::from_rational(field, d0);
    if (!(val == alpha))
        throw std::logic_error("quadratic_preimage: verification failed");
    return t0;
}

}  // namespace superirr
