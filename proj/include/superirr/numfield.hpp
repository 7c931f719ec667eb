#pragma once

// Arithmetic in Q(alpha) = Q[x]/(f) for a monic irreducible modulus f.
// Elements are power-basis coordinate vectors. Norms are resultants against
// the modulus; square roots are found by the norm method: shift until the
// norm of t^2 - u is squarefree, factor it over Q, and map a degree-d factor
// back through a gcd in Q(alpha)[t].

#include <memory>
#include <optional>

#include "superirr/bigpoly.hpp"

namespace superirr {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    // modulus must be monic and irreducible; verified here.
    static NumberFieldPtr create(IntPoly modulus);

    const IntPoly& modulus() const { return modulus_; }
    const RatPoly& modulus_rat() const { return modulus_rat_; }
    int degree() const { return modulus_.degree(); }

  private:
    explicit NumberField(IntPoly m) : modulus_(std::move(m)), modulus_rat_(modulus_.to_rat()) {}
    IntPoly modulus_;
    RatPoly modulus_rat_;
};

class NumberFieldElement {
  public:
    NumberFieldElement(NumberFieldPtr field, RatPoly value);  // reduced mod modulus

    static NumberFieldElement zero(NumberFieldPtr field);
    static NumberFieldElement from_rational(NumberFieldPtr field, Rational r);
    // the class of x, the field generator
    static NumberFieldElement generator(NumberFieldPtr field);

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }  // size = degree
    RatPoly to_poly() const;
    bool is_zero() const;
    bool is_rational() const;

    bool operator==(const NumberFieldElement& rhs) const;
    NumberFieldElement operator-() const;
    NumberFieldElement operator+(const NumberFieldElement& rhs) const;
    NumberFieldElement operator-(const NumberFieldElement& rhs) const;
    NumberFieldElement operator*(const NumberFieldElement& rhs) const;
    NumberFieldElement operator*(const Rational& s) const;
    NumberFieldElement inverse() const;  // throws on zero

    std::string to_string() const;

  private:
    NumberFieldPtr field_;
    std::vector<Rational> coords_;
};

NumberFieldElement field_mul(const NumberFieldElement& u, const NumberFieldElement& v);

// N(u) = Res(modulus, U) for the monic modulus; multiplicative, zero iff u = 0.
Rational norm(const NumberFieldElement& u);

// A square root of u in the field, if one exists; of the two roots the one
// with the lexicographically smaller coordinate sequence is returned.
std::optional<NumberFieldElement> is_square(const NumberFieldElement& u);

// t0 in Q(alpha) with g(t0) = alpha for quadratic g, if it exists.
std::optional<NumberFieldElement> quadratic_preimage(const NumberFieldPtr& field,
                                                     const RatPoly& g);

}  // namespace superirr
