#include "superirr/zfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace superirr {

namespace {

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::mt19937_64 seeded_rng(const IntPoly& f, std::uint64_t p) {
    return std::mt19937_64(fnv1a64("edf|" + poly_key(f) + "|" + std::to_string(p)));
}

// --- arithmetic mod an mpz modulus (coefficients kept in [0, m)) ------------

using ZVec = std::vector<Integer>;

ZVec reduce_mod(const ZVec& f, const Integer& m) {
    ZVec v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) mpz_mod(v[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

ZVec add_mod(const ZVec& a, const ZVec& b, const Integer& m) {
    ZVec v(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
    return reduce_mod(v, m);
}

ZVec sub_mod(const ZVec& a, const ZVec& b, const Integer& m) {
    ZVec v(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b[i];
    return reduce_mod(v, m);
}

ZVec mul_mod(const ZVec& a, const ZVec& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZVec v(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    return reduce_mod(v, m);
}

// division by a monic divisor, everything mod m
std::pair<ZVec, ZVec> divrem_monic_mod(const ZVec& f, const ZVec& h, const Integer& m) {
    if (h.empty() || h.back() != 1)
        throw std::logic_error("divrem_monic_mod: divisor must be monic");
    ZVec rem = f;
    int dh = static_cast<int>(h.size()) - 1;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < dh) return {{}, rem};
    ZVec quot(dr - dh + 1, Integer(0));
    while (dr >= dh) {
        Integer q = rem[dr];
        quot[dr - dh] = q;
        if (q != 0)
            for (int i = 0; i <= dh; ++i) {
                rem[dr - dh + i] -= q * h[i];
                mpz_mod(rem[dr - dh + i].get_mpz_t(), rem[dr - dh + i].get_mpz_t(),
                        m.get_mpz_t());
            }
        --dr;
        while (dr >= 0 && rem[dr] == 0) --dr;
    }
    rem.resize(dr + 1);
    return {quot, rem};
}

ZVec to_zvec(const IntPoly& f) { return f.coeffs(); }
IntPoly from_zvec(ZVec v) { return IntPoly(std::move(v)); }

// --- Hensel lifting ----------------------------------------------------------

struct LiftPair {
    ZVec g, h, s, t;  // f = g*h, s*g + t*h = 1, h monic (all mod current modulus)
};

// One quadratic step: modulus m -> m^2.
LiftPair hensel_step(const ZVec& f, const LiftPair& in, const Integer& m) {
    Integer m2 = m * m;
    ZVec e = sub_mod(reduce_mod(f, m2), mul_mod(in.g, in.h, m2), m2);
    auto [q, r] = divrem_monic_mod(mul_mod(in.s, e, m2), in.h, m2);
    ZVec gs = add_mod(add_mod(in.g, mul_mod(in.t, e, m2), m2), mul_mod(q, in.g, m2), m2);
    ZVec hs = add_mod(in.h, r, m2);
    ZVec b = sub_mod(add_mod(mul_mod(in.s, gs, m2), mul_mod(in.t, hs, m2), m2),
                     ZVec{Integer(1)}, m2);
    auto [c, d] = divrem_monic_mod(mul_mod(in.s, b, m2), hs, m2);
    ZVec ss = sub_mod(in.s, d, m2);
    ZVec ts = sub_mod(sub_mod(in.t, mul_mod(in.t, b, m2), m2), mul_mod(c, gs, m2), m2);
    return {gs, hs, ss, ts};
}

// Bezout coefficients mod p for coprime a, b: s*a + t*b = 1.
std::pair<ModPoly, ModPoly> bezout_modp(const ModPoly& a, const ModPoly& b) {
    std::uint64_t p = a.p();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::one(p), s1 = ModPoly::zero(p);
    ModPoly t0 = ModPoly::zero(p), t1 = ModPoly::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw std::logic_error("bezout_modp: inputs are not coprime");
    // scale so the combination equals 1
    std::uint64_t c = r0.coeffs()[0], e = p - 2, base = c, r = 1;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * base % p);
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
        e >>= 1;
    }
    ModPoly cinv(p, {r});
    return {s0 * cinv, t0 * cinv};
}

ZVec from_modpoly(const ModPoly& f) {
    ZVec v(f.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = Integer(static_cast<unsigned long>(f.coeffs()[i]));
    return v;
}

// Lift the monic mod-p factors of f (f = lc(f) * prod facs mod p) to monic
// factors mod P; P = p^(2^k) is the first square-tower value >= target.
void hensel_lift_rec(const ZVec& f, const std::vector<ModPoly>& facs, std::size_t lo,
                     std::size_t hi, std::uint64_t p, const Integer& P,
                     std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        // monicize f mod P
        ZVec v = reduce_mod(f, P);
        Integer lc = v.back(), inv;
        if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t()) == 0)
            throw std::logic_error("hensel: leading coefficient not invertible");
        for (auto& c : v) {
            c *= inv;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
        }
        out.push_back(from_zvec(std::move(v)));
        return;
    }
    std::size_t mid = lo + (hi - lo + 1) / 2;
    ModPoly A0(p, {1}), B0(p, {1});
    for (std::size_t i = lo; i < mid; ++i) A0 = A0 * facs[i];
    for (std::size_t i = mid; i < hi; ++i) B0 = B0 * facs[i];
    // fold lc(f) into the left half
    ModPoly lcf_p = ModPoly::from_int(IntPoly(ZVec{f.back()}), p);
    A0 = A0 * lcf_p;
    auto [s0, t0] = bezout_modp(A0, B0);

    LiftPair cur{from_modpoly(A0), from_modpoly(B0), from_modpoly(s0), from_modpoly(t0)};
    Integer m(static_cast<unsigned long>(p));
    while (m < P) {
        cur = hensel_step(f, cur, m);
        m *= m;
    }
    if (m != P) throw std::logic_error("hensel: modulus tower mismatch");
    hensel_lift_rec(cur.g, facs, lo, mid, p, P, out);
    hensel_lift_rec(cur.h, facs, mid, hi, p, P, out);
}

Integer symmetric_mod(const Integer& x, const Integer& P) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
    if (r * 2 > P) r -= P;
    return r;
}

IntPoly symmetric_poly(const ZVec& v, const Integer& P) {
    ZVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = symmetric_mod(v[i], P);
    return from_zvec(std::move(w));
}

// coefficient bound: any integer factor of g, scaled by lc(g), stays below
// sqrt(n+1) * 2^n * maxnorm(g) * |lc(g)|
Integer factor_bound(const IntPoly& g) {
    int n = g.degree();
    Integer maxc(0);
    for (const auto& c : g.coeffs()) {
        Integer a = c < 0 ? Integer(-c) : c;
        if (a > maxc) maxc = a;
    }
    Integer s = sqrt(Integer(n + 1)) + 1;
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
    Integer l = g.lc() < 0 ? Integer(-g.lc()) : g.lc();
    return s * two_n * maxc * l;
}

// Zassenhaus on a primitive squarefree polynomial with positive lc.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& g) {
    std::vector<IntPoly> out;
    if (g.degree() == 1) return {g};

    std::uint64_t p = choose_factorization_prime(g);
    auto rng = seeded_rng(g, p);
    std::vector<ModPoly> modfacs = factor_squarefree_modp(ModPoly::from_int(g, p), rng);
    if (modfacs.size() == 1) return {g};

    Integer bound = factor_bound(g);
    Integer target = 2 * bound + 1;
    Integer P(static_cast<unsigned long>(p));
    while (P < target) P *= P;

    std::vector<IntPoly> lifted;
    hensel_lift_rec(to_zvec(g), modfacs, 0, modfacs.size(), p, P, lifted);
    {
        ZVec check{g.lc()};
        for (const IntPoly& h : lifted) check = mul_mod(check, to_zvec(h), P);
        if (sub_mod(reduce_mod(to_zvec(g), P), check, P) != ZVec{})
            throw std::logic_error("hensel: lifted factorization does not reproduce input");
    }

    // subset recombination, smallest subsets first
    IntPoly rest = g;
    std::vector<IntPoly> pool = std::move(lifted);
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            // early rejection on the constant coefficient
            Integer c0 = rest.lc();
            for (std::size_t i : idx) c0 *= pool[i].coeff(0);
            c0 = symmetric_mod(c0, P);
            bool plausible = c0 != 0;
            if (plausible) {
                Integer t0 = rest.lc() * rest.coeff(0);
                plausible = (t0 % c0) == 0;
            }
            if (plausible) {
                ZVec cand{rest.lc()};
                for (std::size_t i : idx) cand = mul_mod(cand, to_zvec(pool[i]), P);
                IntPoly candidate = symmetric_poly(cand, P).primitive_part();
                if (auto quot = try_exact_div(rest, candidate)) {
                    out.push_back(candidate);
                    rest = *quot;
                    std::vector<IntPoly> keep;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            keep.push_back(pool[i]);
                    pool = std::move(keep);
                    found = true;
                    break;
                }
            }
            // next subset of the same size (lexicographic)
            int pos = static_cast<int>(size) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (rest.degree() > 0) out.push_back(rest.primitive_part());
    return out;
}

// Yun squarefree decomposition of a primitive polynomial with positive lc.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition_z(const IntPoly& g) {
    RatPoly G = g.to_rat();
    RatPoly d = gcd(G, G.derivative());
    if (d.degree() == 0) return {{g, 1}};
    std::vector<std::pair<IntPoly, unsigned>> out;
    RatPoly b = divrem(G, d).first;
    RatPoly c = divrem(G.derivative(), d).first;
    RatPoly y = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        RatPoly a = gcd(b, y);
        if (a.degree() > 0) out.emplace_back(a.split_integer().second, i);
        b = divrem(b, a).first;
        c = divrem(y, a).first;
        y = c - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace

RatPoly Factorization::expand() const {
    RatPoly acc = RatPoly::constant(unit);
    for (const auto& [f, e] : factors) acc = acc * f.to_rat().pow(e);
    return acc;
}

std::uint64_t choose_factorization_prime(const IntPoly& f) {
    for (std::uint64_t p = 3;; p += 2) {
        if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ModPoly fp = ModPoly::from_int(f, p);
        if (gcd(fp, fp.derivative()).degree() == 0) return p;
    }
}

std::vector<std::pair<ModPoly, unsigned>> factor_mod_prime(const IntPoly& f,
                                                           std::uint64_t p) {
    if (!is_prime(Integer(static_cast<unsigned long>(p))))
        throw std::invalid_argument("factor_mod_prime: modulus must be prime");
    if (f.is_zero()) throw std::invalid_argument("factor_mod_prime: zero polynomial");
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::invalid_argument("factor_mod_prime: p divides the leading coefficient");
    ModPoly fp = ModPoly::from_int(f, p);
    auto rng = seeded_rng(f, p);
    std::vector<std::pair<ModPoly, unsigned>> out;
    for (const auto& [part, mult] : squarefree_decomposition(fp)) {
        for (const ModPoly& irr : factor_squarefree_modp(part, rng))
            out.emplace_back(irr, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

Factorization factor_over_integers(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_over_integers: zero polynomial");
    Factorization out;
    auto [cont, g] = content_primitive(f);
    out.unit = Rational(cont);
    if (g.degree() <= 0) return out;

    // peel off powers of x
    std::size_t mult0 = 0;
    while (g.coeff(0) == 0) {
        ++mult0;
        std::vector<Integer> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = IntPoly(std::move(shifted));
    }
    if (mult0 > 0) out.factors.emplace_back(IntPoly({0, 1}), static_cast<unsigned>(mult0));

    if (g.degree() > 0) {
        for (const auto& [part, mult] : squarefree_decomposition_z(g)) {
            for (const IntPoly& irr : factor_squarefree_primitive(part))
                out.factors.emplace_back(irr, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

namespace {

// degree multiset from distinct-degree splitting (no equal-degree work)
std::vector<int> modp_degree_multiset(const ModPoly& fp) {
    std::vector<int> degs;
    for (const auto& [part, d] : distinct_degree_split(fp))
        for (int i = 0; i < part.degree() / d; ++i) degs.push_back(d);
    return degs;
}

// bitmask of achievable proper factor degrees
std::vector<bool> subset_sums(const std::vector<int>& degs, int n) {
    std::vector<bool> can(n + 1, false);
    can[0] = true;
    for (int d : degs)
        for (int s = n; s >= d; --s)
            if (can[s - d]) can[s] = true;
    return can;
}

}  // namespace

bool is_irreducible_over_rationals(const IntPoly& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("is_irreducible_over_rationals: constant input");
    IntPoly g = f.primitive_part();
    int n = g.degree();
    if (n == 1) return true;
    if (g.coeff(0) == 0) return false;  // x divides, n >= 2

    std::vector<bool> possible(n + 1, true);
    int good = 0, bad = 0;
    bool squarefree_checked = false;
    for (std::uint64_t p = 3; good < 4; p += 2) {
        if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
        if (mpz_divisible_ui_p(g.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ModPoly fp = ModPoly::from_int(g, p);
        if (gcd(fp, fp.derivative()).degree() != 0) {
            if (++bad >= 3 && !squarefree_checked) {
                if (!is_squarefree(g.to_rat())) return false;
                squarefree_checked = true;
            }
            continue;
        }
        ++good;
        auto degs = modp_degree_multiset(fp);
        if (degs.size() == 1) return true;
        auto can = subset_sums(degs, n);
        for (int d = 1; d < n; ++d)
            if (!can[d]) possible[d] = false;
        bool any = false;
        for (int d = 1; d < n; ++d)
            if (possible[d] && possible[n - d]) any = true;
        if (!any) return true;
    }
    // cheap reducibility shortcut: small integer roots
    for (long r : {1L, -1L, 2L, -2L})
        if (g.eval(Integer(r)) == 0) return false;

    Factorization full = factor_over_integers(g);
    return full.factors.size() == 1 && full.factors[0].second == 1;
}

bool is_irreducible_over_rationals(const RatPoly& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("is_irreducible_over_rationals: constant input");
    return is_irreducible_over_rationals(f.split_integer().second);
}

}  // namespace superirr
