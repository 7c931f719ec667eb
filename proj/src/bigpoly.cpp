#include "superirr/bigpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superirr {

// --- IntPoly ----------------------------------------------------------------

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(Integer c, std::size_t deg) {
    std::vector<Integer> v(deg + 1, Integer(0));
    v[deg] = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::lc() const {
    if (is_zero()) throw std::domain_error("lc of zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Integer> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const { return *this + (-rhs); }

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Integer> v(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Integer& s) const {
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * s;
    return IntPoly(std::move(v));
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Rational IntPoly::eval(const Rational& x) const { return to_rat().eval(x); }

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<Integer> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Integer(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly acc = IntPoly::one();
    IntPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Integer IntPoly::content() const {
    if (is_zero()) throw std::domain_error("content of zero polynomial");
    Integer g(0);
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (lc() < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Integer c = content();
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] / c;
    return IntPoly(std::move(v));
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = Rational(coeffs_[i]);
    return RatPoly(std::move(v));
}

std::string IntPoly::to_string() const { return to_rat().to_string(); }

// --- RatPoly ----------------------------------------------------------------

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

RatPoly RatPoly::monomial(Rational c, std::size_t deg) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = std::move(c);
    return RatPoly(std::move(v));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPoly::lc() const {
    if (is_zero()) throw std::domain_error("lc of zero polynomial");
    return coeffs_.back();
}

Rational RatPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const { return *this + (-rhs); }

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return RatPoly();
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * s;
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly acc = RatPoly::one();
    RatPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / lc());
}

std::pair<Rational, IntPoly> RatPoly::split_integer() const {
    if (is_zero()) throw std::domain_error("split_integer of zero polynomial");
    Integer den(1);
    for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rational scaled = coeffs_[i] * Rational(den);
        v[i] = scaled.get_num();
    }
    IntPoly cleared(std::move(v));
    Integer c = cleared.content();
    return {make_rational(c, den), cleared.primitive_part()};
}

bool RatPoly::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_int() const {
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1)
            throw std::domain_error("to_int: coefficient is not an integer");
        v[i] = coeffs_[i].get_num();
    }
    return IntPoly(std::move(v));
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            out << a;
        } else {
            if (!unit) out << a << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// --- operations -------------------------------------------------------------

RatPoly mul(const RatPoly& f, const RatPoly& g) { return f * g; }

RatPoly compose(const RatPoly& f, const RatPoly& g) {
    RatPoly acc;
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * g + RatPoly::constant(f.coeffs()[i]);
    return acc;
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
    IntPoly acc;
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * g + IntPoly::monomial(f.coeffs()[i], 0);
    return acc;
}

std::pair<Integer, IntPoly> content_primitive(const IntPoly& f) {
    Integer c = f.content();
    return {c, f.primitive_part()};
}

RatPoly reversal(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("reversal of zero polynomial");
    std::vector<Rational> v(f.coeffs().rbegin(), f.coeffs().rend());
    return RatPoly(std::move(v));
}

IntPoly reversal(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("reversal of zero polynomial");
    std::vector<Integer> v(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPoly(std::move(v));
}

RatPoly shift_scale(const RatPoly& f, const Rational& s, const Rational& a) {
    if (a == 0) throw std::invalid_argument("shift_scale: a must be nonzero");
    if (f.is_zero()) return f;
    RatPoly arg(std::vector<Rational>{s / a, Rational(1) / a});  // (x + s)/a
    RatPoly scaled = compose(f, arg);
    Rational factor(1);
    for (int i = 0; i < f.degree(); ++i) factor *= a;
    return scaled * factor;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    std::vector<Rational> rem(f.coeffs());
    int dg = g.degree();
    int dr = f.degree();
    if (dr < dg) return {RatPoly(), f};
    std::vector<Rational> quot(dr - dg + 1, Rational(0));
    const Rational& glc = g.lc();
    while (dr >= dg) {
        Rational q = rem[dr] / glc;
        quot[dr - dg] = q;
        for (int i = 0; i <= dg; ++i) rem[dr - dg + i] -= q * g.coeffs()[i];
        rem[dr] = 0;  // cancel exactly
        while (dr >= 0 && (dr >= static_cast<int>(rem.size()) || rem[dr] == 0)) --dr;
    }
    rem.resize(dr + 1);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::optional<IntPoly> try_exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("try_exact_div: zero divisor");
    if (f.is_zero()) return IntPoly();
    int dg = g.degree();
    int dr = f.degree();
    if (dr < dg) return std::nullopt;
    std::vector<Integer> rem(f.coeffs());
    std::vector<Integer> quot(dr - dg + 1, Integer(0));
    const Integer& glc = g.lc();
    while (dr >= dg) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[dr].get_mpz_t(), glc.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[dr - dg] = q;
        for (int i = 0; i <= dg; ++i) rem[dr - dg + i] -= q * g.coeffs()[i];
        while (dr >= 0 && (dr >= static_cast<int>(rem.size()) || rem[dr] == 0)) --dr;
    }
    if (dr >= 0) return std::nullopt;  // nonzero remainder of lower degree
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& g, const IntPoly& f) {
    return try_exact_div(f, g).has_value();
}

RatPoly gcd(const RatPoly& f, const RatPoly& g) {
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

ExtGcd ext_gcd(const RatPoly& f, const RatPoly& g) {
    RatPoly r0 = f, r1 = g;
    RatPoly u0 = RatPoly::one(), u1 = RatPoly::zero();
    RatPoly v0 = RatPoly::zero(), v1 = RatPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rational inv = Rational(1) / r0.lc();
    return {r0 * inv, u0 * inv, v0 * inv};
}

bool is_squarefree(const RatPoly& f) {
    if (f.degree() <= 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

namespace {

// Resultant of nonzero integer polynomials by the subresultant PRS
// (Cohen, A Course in Computational Algebraic Number Theory, Alg. 3.3.7).
Integer resultant_subres(IntPoly A, IntPoly B) {
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2) && (B.degree() % 2)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), B.lc().get_mpz_t(), A.degree());
        return sign * r;
    }
    Integer ca = A.content(), cb = B.content();
    A = A.primitive_part();
    B = B.primitive_part();
    Integer t(1), p1, p2;
    mpz_pow_ui(p1.get_mpz_t(), ca.get_mpz_t(), B.degree());
    mpz_pow_ui(p2.get_mpz_t(), cb.get_mpz_t(), A.degree());
    t = p1 * p2;

    Integer g(1), h(1);
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() % 2) && (B.degree() % 2)) sign = -sign;
        // pseudo-remainder: lc(B)^{delta+1} * A = Q*B + R
        Integer mult;
        mpz_pow_ui(mult.get_mpz_t(), B.lc().get_mpz_t(), delta + 1);
        IntPoly R = A * mult;
        {
            std::vector<Integer> rem(R.coeffs());
            int dr = R.degree();
            int db = B.degree();
            while (dr >= db) {
                Integer q = rem[dr] / B.lc();  // exact by construction
                for (int i = 0; i <= db; ++i) rem[dr - db + i] -= q * B.coeffs()[i];
                while (dr >= 0 && (dr >= static_cast<int>(rem.size()) || rem[dr] == 0)) --dr;
            }
            rem.resize(dr + 1);
            R = IntPoly(std::move(rem));
        }
        IntPoly newA = B;
        Integer divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        IntPoly newB;
        if (!R.is_zero()) {
            std::vector<Integer> v(R.coeffs().size());
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = R.coeffs()[i] / divisor;
            newB = IntPoly(std::move(v));
        }
        A = std::move(newA);
        B = std::move(newB);
        if (B.is_zero()) return Integer(0);  // common factor
        g = A.lc();
        // h <- g^delta / h^{delta-1}, exact in Z
        Integer gn;
        mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), delta);
        if (delta == 0) {
            // h unchanged
        } else {
            Integer hd;
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta - 1);
            h = gn / hd;
        }
        if (B.degree() == 0) {
            Integer bn, hd;
            mpz_pow_ui(bn.get_mpz_t(), B.lc().get_mpz_t(), A.degree());
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), A.degree() - 1);
            return sign * t * (bn / hd);
        }
    }
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) throw std::invalid_argument("resultant: f must be nonzero");
    if (g.is_zero()) return f.degree() >= 1 ? Integer(0) : Integer(1);
    if (f.degree() == 0 && g.degree() == 0) return Integer(1);
    return resultant_subres(f, g);
}

Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero()) throw std::invalid_argument("resultant: f must be nonzero");
    if (g.is_zero()) return f.degree() >= 1 ? Rational(0) : Rational(1);
    if (f.degree() == 0 && g.degree() == 0) return Rational(1);
    auto [cf, F] = f.split_integer();
    auto [cg, G] = g.split_integer();
    Rational fac(1);
    for (int i = 0; i < g.degree(); ++i) fac *= cf;
    for (int i = 0; i < f.degree(); ++i) fac *= cg;
    return fac * Rational(resultant(F, G));
}

Rational discriminant(const RatPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (d == 1) return Rational(1);
    Rational r = resultant(f, f.derivative()) / f.lc();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2) r = -r;
    return r;
}

std::string poly_key(const IntPoly& f) {
    std::string s;
    for (const auto& c : f.coeffs()) {
        s += c.get_str();
        s += ',';
    }
    return s;
}

}  // namespace superirr
