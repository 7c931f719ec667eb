#pragma once

// Dense univariate polynomials with exact coefficients: IntPoly over the
// integers, RatPoly over the rationals. Values are immutable in spirit --
// every operation returns a fresh polynomial -- so sharing across threads
// needs no synchronization.
//
// Representation: coeffs[i] is the coefficient of x^i; the vector is empty
// for the zero polynomial and otherwise ends in a nonzero entry.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superirr/numeric.hpp"

namespace superirr {

class RatPoly;

class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly monomial(Integer c, std::size_t deg);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Integer& lc() const;
    Integer coeff(std::size_t i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const Integer& s) const;
    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPoly& rhs) const { return coeffs_ != rhs.coeffs_; }

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    IntPoly derivative() const;
    IntPoly pow(unsigned e) const;

    // gcd of all coefficients, with the sign of the leading coefficient;
    // throws on the zero polynomial.
    Integer content() const;
    IntPoly primitive_part() const;

    RatPoly to_rat() const;
    std::string to_string() const;

  private:
    void normalize();
    std::vector<Integer> coeffs_;
};

class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<long> coeffs);

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return RatPoly({1}); }
    static RatPoly x() { return RatPoly({0, 1}); }
    static RatPoly monomial(Rational c, std::size_t deg);
    static RatPoly constant(Rational c) { return monomial(std::move(c), 0); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && lc() == 1; }

    const Rational& lc() const;
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& rhs) const;
    RatPoly operator-(const RatPoly& rhs) const;
    RatPoly operator*(const RatPoly& rhs) const;
    RatPoly operator*(const Rational& s) const;
    bool operator==(const RatPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const RatPoly& rhs) const { return coeffs_ != rhs.coeffs_; }

    Rational eval(const Rational& x) const;

    RatPoly derivative() const;
    RatPoly pow(unsigned e) const;
    RatPoly monic() const;

    // f = scalar * primitive with primitive an integer polynomial of content 1
    // and positive leading coefficient; throws on the zero polynomial.
    std::pair<Rational, IntPoly> split_integer() const;
    // True when every coefficient is an integer.
    bool is_integral() const;
    IntPoly to_int() const;

    std::string to_string() const;

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// --- spec operations -------------------------------------------------------

RatPoly mul(const RatPoly& f, const RatPoly& g);

// f(g(x)); degree multiplies when both sides are nonconstant.
RatPoly compose(const RatPoly& f, const RatPoly& g);
IntPoly compose(const IntPoly& f, const IntPoly& g);

std::pair<Integer, IntPoly> content_primitive(const IntPoly& f);

// x^{deg f} * f(1/x): the coefficient sequence reversed.
RatPoly reversal(const RatPoly& f);
IntPoly reversal(const IntPoly& f);

// a^{deg f} * f((x + s)/a); a != 0. With s = 0 this is the scale transform
// that preserves 2-superirreducibility.
RatPoly shift_scale(const RatPoly& f, const Rational& s, const Rational& a);

// Subresultant-PRS resultant; exact over the rationals via denominator
// clearing. Res(f, 0) is 0 for deg f >= 1 and 1 for nonzero constants.
Rational resultant(const RatPoly& f, const RatPoly& g);
Integer resultant(const IntPoly& f, const IntPoly& g);

// (-1)^{d(d-1)/2} Res(f, f') / lc(f), d = deg f >= 1.
Rational discriminant(const RatPoly& f);

// --- supporting arithmetic -------------------------------------------------

// Quotient and remainder over the rationals; g nonzero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& g);

// Exact quotient over the integers, or nullopt when g does not divide f.
std::optional<IntPoly> try_exact_div(const IntPoly& f, const IntPoly& g);
bool divides(const IntPoly& g, const IntPoly& f);

// Monic gcd over the rationals (gcd(0, 0) = 0).
RatPoly gcd(const RatPoly& f, const RatPoly& g);

// g = gcd monic, with u*f + v*g0 = g for inputs (f, g0).
struct ExtGcd {
    RatPoly g, u, v;
};
ExtGcd ext_gcd(const RatPoly& f, const RatPoly& g);

bool is_squarefree(const RatPoly& f);

// Stable digest of the coefficient sequence (for seeding and checkpoints).
std::string poly_key(const IntPoly& f);

}  // namespace superirr
