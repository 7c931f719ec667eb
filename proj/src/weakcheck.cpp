#include "superirr/weakcheck.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "superirr/zfactor.hpp"

namespace superirr {

IntPoly trinomial(unsigned k) {
    if (k < 2) throw std::invalid_argument("trinomial: k >= 2 required");
    std::vector<Integer> c(2 * k + 2, Integer(0));
    c[0] = 1;
    c[1] = 2;
    c[2 * k + 1] = 1;
    return IntPoly(std::move(c));
}

Integer trinomial_disc(unsigned k) {
    IntPoly f = trinomial(k);
    Integer n(2 * k + 1);
    Integer closed, t1, t2;
    mpz_pow_ui(t1.get_mpz_t(), n.get_mpz_t(), 2 * k + 1);          // (2k+1)^{2k+1}
    mpz_ui_pow_ui(t2.get_mpz_t(), 2 * k, 2 * k);                   // (2k)^{2k}
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k + 1);              // 2^{2k+1}
    closed = t1 + two_pow * t2;
    if (k % 2 == 1) closed = -closed;

    Rational via_res = discriminant(f.to_rat());
    if (via_res != Rational(closed))
        throw std::logic_error("trinomial_disc: closed form disagrees with the resultant");
    if (mpz_even_p(closed.get_mpz_t()))
        throw std::logic_error("trinomial_disc: discriminant is not odd");
    return closed;
}

namespace {

// squaring + reduction over any integer-like coefficient type
template <typename T>
std::vector<T> square_reduce(const std::vector<T>& a, unsigned k) {
    std::size_t n = 2 * k + 1;
    std::vector<T> c(2 * n - 1, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == T(0)) continue;
        for (std::size_t j = 0; j < n; ++j) c[i + j] += a[i] * a[j];
    }
    // theta^{2k+j} = -2 theta^j - theta^{j-1} for j = 2k downto 1
    for (std::size_t e = c.size(); e-- > n;) {
        T v = c[e];
        if (v == T(0)) continue;
        c[e] = T(0);
        std::size_t j = e - 2 * k;
        c[j] += T(-2) * v;
        c[j - 1] += T(-1) * v;
    }
    c.resize(n);
    return c;
}

}  // namespace

OrderElement square_in_order(const OrderElement& a) {
    if (a.k < 2) throw std::invalid_argument("square_in_order: k >= 2 required");
    if (a.coords.size() != 2 * a.k + 1)
        throw std::invalid_argument("square_in_order: coordinate length mismatch");
    return OrderElement{a.k, square_reduce(a.coords, a.k)};
}

namespace {

unsigned default_jobs(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUPERIRR_JOBS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace

CongruenceReport congruence_verify(unsigned k, unsigned jobs) {
    if (k < 2 || k > 5)
        throw std::invalid_argument("congruence_verify: 2 <= k <= 5 required");
    const unsigned n = 2 * k + 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= 4;

    unsigned workers = default_jobs(jobs);
    std::vector<std::vector<std::vector<int>>> violations(workers);
    std::vector<std::uint64_t> counted(workers, 0);

    auto run_range = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        std::vector<long> a(n);
        for (std::uint64_t code = lo; code < hi; ++code) {
            std::uint64_t v = code;
            bool primitive = false;
            for (unsigned i = 0; i < n; ++i) {
                a[i] = static_cast<long>(v & 3);
                if (a[i] & 1) primitive = true;
                v >>= 2;
            }
            if (!primitive) continue;
            ++counted[w];
            std::vector<long> sq = square_reduce(a, k);
            bool candidate = true;
            for (unsigned i = 2; i < n && candidate; ++i)
                if (sq[i] % 4 != 0) candidate = false;
            if (!candidate) continue;
            bool theta_even = (sq[1] % 2) == 0;
            bool const_odd = (sq[0] % 2) != 0;
            if (!(theta_even && const_odd)) {
                std::vector<int> bad(n);
                for (unsigned i = 0; i < n; ++i) bad[i] = static_cast<int>(a[i]);
                violations[w].push_back(std::move(bad));
            }
        }
    };

    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run_range, w, lo, hi);
    }
    for (auto& t : pool) t.join();

    CongruenceReport report;
    report.k = k;
    report.modulus = 4;
    for (unsigned w = 0; w < workers; ++w) {
        report.vectors_checked += counted[w];
        for (auto& v : violations[w]) report.violations.push_back(std::move(v));
    }
    std::sort(report.violations.begin(), report.violations.end());

    std::uint64_t expected = total;
    std::uint64_t even_only = 1;
    for (unsigned i = 0; i < n; ++i) even_only *= 2;
    expected -= even_only;
    if (report.vectors_checked != expected)
        throw std::logic_error("congruence_verify: primitive vector count mismatch");
    return report;
}

WeakCheckReport weak_check(unsigned k, const Integer& bound, unsigned jobs) {
    if (k < 2) throw std::invalid_argument("weak_check: k >= 2 required");
    if (bound < 1) throw std::invalid_argument("weak_check: bound >= 1 required");
    IntPoly f = trinomial(k);

    long B = static_cast<long>(bound.get_si());
    std::vector<long> avals;
    for (long a = -B; a <= B; ++a)
        if (a != 0) avals.push_back(a);

    unsigned workers = default_jobs(jobs);
    std::vector<std::vector<WeakCheckCounterexample>> bad(avals.size());
    std::vector<std::uint64_t> pairs(avals.size(), 0);
    std::atomic<std::size_t> next{0};

    auto run = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= avals.size()) return;
            long a = avals[idx];
            for (long b = -B; b <= B; ++b) {
                ++pairs[idx];
                IntPoly quad({b, 0, a});
                if (!is_irreducible_over_rationals(compose(f, quad)))
                    bad[idx].push_back({Integer(a), Integer(b), 2});
                IntPoly lin({b, a});
                if (!is_irreducible_over_rationals(compose(f, lin)))
                    bad[idx].push_back({Integer(a), Integer(b), 1});
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, avals.size()); ++w)
        pool.emplace_back(run);
    for (auto& t : pool) t.join();

    WeakCheckReport report;
    report.k = k;
    report.bound = bound;
    for (std::size_t i = 0; i < avals.size(); ++i) {
        report.pairs_checked += pairs[i];
        for (auto& c : bad[i]) report.counterexamples.push_back(std::move(c));
    }
    return report;
}

}  // namespace superirr
