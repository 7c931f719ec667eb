#pragma once

// Exact scalar arithmetic used throughout: arbitrary-precision integers and
// rationals backed by GMP. Rationals are kept canonical (lowest terms,
// positive denominator) by mpq_class as long as inputs are canonicalized.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace superirr {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den with den != 0; result canonical.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational to_rational(const Integer& z) { return Rational(z); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Exact integer n-th root: returns r with r^n == a, if it exists.
// For even n, a must be >= 0; for odd n, negative a is allowed.
std::optional<Integer> exact_nth_root(const Integer& a, unsigned n);

inline std::optional<Integer> exact_sqrt(const Integer& a) {
    return exact_nth_root(a, 2);
}

// True iff q == r^n for some rational r (exact test on numerator and
// denominator separately; q is canonical so the two tests are independent).
bool rational_is_nth_power(const Rational& q, unsigned n);

// Deterministic trial-division primality test; inputs here are desk scale.
bool is_prime(const Integer& n);

// 64-bit FNV-1a, used to derive reproducible seeds and checkpoint digests.
std::uint64_t fnv1a64(const std::string& data);

}  // namespace superirr
