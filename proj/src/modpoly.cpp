#include "superirr/modpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superirr {

namespace {

inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("invm: zero");
    return powm(a, p - 2, p);
}

}  // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
    if (p_ < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
    for (auto& c : coeffs_) c %= p_;
    normalize();
}

ModPoly ModPoly::from_int(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> v(f.coeffs().size());
    Integer m(static_cast<unsigned long>(p)), r;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_mod(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
        v[i] = r.get_ui();
    }
    return ModPoly(p, std::move(v));
}

void ModPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool ModPoly::operator<(const ModPoly& rhs) const {
    if (degree() != rhs.degree()) return degree() < rhs.degree();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return coeffs_[i] < rhs.coeffs_[i];
    return false;
}

ModPoly ModPoly::operator+(const ModPoly& rhs) const {
    std::vector<std::uint64_t> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] = addm(v[i], rhs.coeffs_[i], p_);
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator-(const ModPoly& rhs) const {
    std::vector<std::uint64_t> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] = subm(v[i], rhs.coeffs_[i], p_);
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return ModPoly::zero(p_);
    std::vector<std::uint64_t> v(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] = addm(v[i + j], mulm(coeffs_[i], rhs.coeffs_[j], p_), p_);
    }
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    std::uint64_t inv = invm(lc(), p_);
    std::vector<std::uint64_t> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = mulm(coeffs_[i], inv, p_);
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::derivative() const {
    if (coeffs_.size() <= 1) return ModPoly::zero(p_);
    std::vector<std::uint64_t> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = mulm(coeffs_[i], i % p_, p_);
    return ModPoly(p_, std::move(v));
}

IntPoly ModPoly::lift() const {
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i] = Integer(static_cast<unsigned long>(coeffs_[i]));
    return IntPoly(std::move(v));
}

std::string ModPoly::to_string() const {
    std::ostringstream out;
    out << lift().to_string() << " (mod " << p_ << ")";
    return out.str();
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& f, const ModPoly& g) {
    if (g.is_zero()) throw std::domain_error("divrem: zero divisor mod p");
    std::uint64_t p = g.p();
    if (f.degree() < g.degree()) return {ModPoly::zero(p), f};
    std::vector<std::uint64_t> rem(f.coeffs());
    int dg = g.degree();
    int dr = f.degree();
    std::vector<std::uint64_t> quot(dr - dg + 1, 0);
    std::uint64_t inv = invm(g.lc(), p);
    while (dr >= dg) {
        std::uint64_t q = mulm(rem[dr], inv, p);
        quot[dr - dg] = q;
        if (q != 0)
            for (int i = 0; i <= dg; ++i)
                rem[dr - dg + i] = subm(rem[dr - dg + i], mulm(q, g.coeffs()[i], p), p);
        while (dr >= 0 && rem[dr] == 0) --dr;
    }
    rem.resize(dr + 1);
    return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly gcd(const ModPoly& f, const ModPoly& g) {
    ModPoly a = f, b = g;
    while (!b.is_zero()) {
        ModPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
    ModPoly acc = ModPoly::one(m.p());
    ModPoly b = divrem(base, m).second;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = divrem(acc * b, m).second;
        b = divrem(b * b, m).second;
        k >>= 1;
    }
    return acc;
}

namespace {

// every p-th coefficient of g = h(x^p); valid because Frobenius fixes F_p
ModPoly pth_root(const ModPoly& g) {
    std::uint64_t p = g.p();
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < g.coeffs().size(); i += p) v.push_back(g.coeffs()[i]);
    return ModPoly(p, std::move(v));
}

void squarefree_rec(const ModPoly& f, unsigned mult,
                    std::vector<std::pair<ModPoly, unsigned>>& out) {
    std::uint64_t p = f.p();
    ModPoly g = f.monic();
    if (g.degree() <= 0) return;
    ModPoly d = g.derivative();
    if (d.is_zero()) {
        squarefree_rec(pth_root(g), mult * static_cast<unsigned>(p), out);
        return;
    }
    ModPoly c = gcd(g, d);
    ModPoly w = divrem(g, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, c);
        ModPoly fac = divrem(w, y).first;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), mult * i);
        w = std::move(y);
        c = divrem(c, w).first;
        ++i;
    }
    // leftover c collects factors whose multiplicity is divisible by p
    if (c.degree() > 0) squarefree_rec(c, mult, out);
}

}  // namespace

std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    squarefree_rec(f, 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_split(const ModPoly& f) {
    std::uint64_t p = f.p();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly g = f.monic();
    ModPoly h = divrem(ModPoly::x(p), g).second;  // x^{p^d} mod g, d = 0 here
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            out.emplace_back(g, g.degree());
            break;
        }
        h = powmod(h, Integer(static_cast<unsigned long>(p)), g);
        ModPoly split = gcd(g, h - divrem(ModPoly::x(p), g).second);
        if (split.degree() > 0) {
            out.emplace_back(split, d);
            g = divrem(g, split).first;
            h = divrem(h, g).second;
        }
    }
    return out;
}

std::vector<ModPoly> equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng) {
    std::uint64_t p = f.p();
    ModPoly g = f.monic();
    if (g.degree() == d) return {g};
    if (g.degree() % d != 0)
        throw std::logic_error("equal_degree_split: degree mismatch");

    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    ModPoly splitter = ModPoly::zero(p);
    while (true) {
        std::vector<std::uint64_t> v(g.degree());
        for (auto& c : v) c = coeff(rng);
        ModPoly r(p, std::move(v));
        if (r.degree() < 1) continue;
        ModPoly e;
        if (p == 2) {
            // trace map r + r^2 + ... + r^{2^{d-1}}
            ModPoly t = divrem(r, g).second;
            ModPoly acc = t;
            for (int i = 1; i < d; ++i) {
                t = divrem(t * t, g).second;
                acc = acc + t;
            }
            e = acc;
        } else {
            Integer q;
            mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(d));
            e = powmod(r, (q - 1) / 2, g) - ModPoly::one(p);
        }
        ModPoly s = gcd(g, e);
        if (s.degree() > 0 && s.degree() < g.degree()) {
            splitter = std::move(s);
            break;
        }
    }
    auto out = equal_degree_split(splitter, d, rng);
    auto rest = equal_degree_split(divrem(g, splitter).first, d, rng);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<ModPoly> factor_squarefree_modp(const ModPoly& f, std::mt19937_64& rng) {
    std::vector<ModPoly> out;
    for (const auto& [part, d] : distinct_degree_split(f)) {
        auto split = equal_degree_split(part, d, rng);
        out.insert(out.end(), split.begin(), split.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace superirr
