#pragma once

// Polynomials over the prime field Z/p for word-sized p. Support layer for
// the integer factorizer: squarefree, distinct-degree and equal-degree
// splitting all live here. Randomized splitting draws from an RNG owned by
// the caller so that factorizations stay reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "superirr/bigpoly.hpp"

namespace superirr {

class ModPoly {
  public:
    ModPoly() : p_(0) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static ModPoly zero(std::uint64_t p) { return ModPoly(p, {}); }
    static ModPoly one(std::uint64_t p) { return ModPoly(p, {1}); }
    static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }
    static ModPoly from_int(const IntPoly& f, std::uint64_t p);

    std::uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t lc() const { return coeffs_.back(); }
    std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    bool operator==(const ModPoly& rhs) const {
        return p_ == rhs.p_ && coeffs_ == rhs.coeffs_;
    }
    bool operator<(const ModPoly& rhs) const;  // (degree, coeff sequence) order

    ModPoly operator+(const ModPoly& rhs) const;
    ModPoly operator-(const ModPoly& rhs) const;
    ModPoly operator*(const ModPoly& rhs) const;
    ModPoly monic() const;
    ModPoly derivative() const;

    IntPoly lift() const;            // coefficients in [0, p)
    std::string to_string() const;

  private:
    void normalize();
    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

std::pair<ModPoly, ModPoly> divrem(const ModPoly& f, const ModPoly& g);
ModPoly gcd(const ModPoly& f, const ModPoly& g);  // monic (or zero)

// base^e mod m, with arbitrary-precision exponent.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);

// f = prod parts[i].first ^ parts[i].second with each part squarefree;
// valid in characteristic p.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f);

// f monic squarefree: returns (product of irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_split(const ModPoly& f);

// f monic squarefree with all irreducible factors of degree d: full split.
// Uses Cantor-Zassenhaus for odd p and the trace map for p = 2.
std::vector<ModPoly> equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng);

// Complete factorization of a monic squarefree polynomial, sorted.
std::vector<ModPoly> factor_squarefree_modp(const ModPoly& f, std::mt19937_64& rng);

}  // namespace superirr
