#include "superirr/numeric.hpp"

#include <stdexcept>

namespace superirr {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Integer> exact_nth_root(const Integer& a, unsigned n) {
    if (n == 0) throw std::invalid_argument("exact_nth_root: n must be positive");
    if (a < 0 && n % 2 == 0) return std::nullopt;
    Integer root;
    int exactish = mpz_root(root.get_mpz_t(), a.get_mpz_t(), n);
    if (exactish == 0) return std::nullopt;
    return root;
}

bool rational_is_nth_power(const Rational& q, unsigned n) {
    return exact_nth_root(q.get_num(), n).has_value() &&
           exact_nth_root(q.get_den(), n).has_value();
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace superirr
