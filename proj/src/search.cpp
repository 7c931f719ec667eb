#include "superirr/search.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "superirr/serialize.hpp"
#include "superirr/zfactor.hpp"

namespace superirr {

unsigned resolve_jobs(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUPERIRR_JOBS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

struct Plan {
    SearchMode mode;
    RatPoly target;      // rational view of the target
    IntPoly target_int;  // integer mode only
    long B = 0;
    long Q = 1;
    long total_slices = 0;
    std::string digest;
};

std::string plan_digest(SearchMode mode, const RatPoly& target, long B, long Q) {
    std::ostringstream s;
    s << (mode == SearchMode::integer_box ? "int|" : "rat|");
    for (const auto& c : target.coeffs()) s << c.get_str() << ",";
    s << "|" << B << "|" << Q;
    std::uint64_t h = fnv1a64(s.str());
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

Plan make_plan(SearchMode mode, const RatPoly& target, long B, long Q) {
    if (target.degree() < 2)
        throw std::invalid_argument("search: deg f >= 2 required");
    if (B < 1) throw std::invalid_argument("search: bound >= 1 required");
    if (Q < 1) throw std::invalid_argument("search: denominator bound >= 1 required");
    Plan p;
    p.mode = mode;
    p.target = target;
    if (mode == SearchMode::integer_box) {
        if (!target.is_integral())
            throw std::invalid_argument("integer search needs an integer target");
        p.target_int = target.to_int();
        p.total_slices = B;  // slice a covers leading coefficients +-a
    } else {
        p.total_slices = Q * 2 * B;  // slice per (q, a)
    }
    p.B = B;
    p.Q = Q;
    p.digest = plan_digest(mode, target, B, Q);
    return p;
}

struct SliceOutcome {
    long slice = 0;
    std::uint64_t tested = 0;
    std::vector<SubstitutionWitness> found;
};

// first-factor witness for a reducible composition; nullopt if irreducible
std::optional<SubstitutionWitness> witness_for(const RatPoly& f, const RatPoly& g) {
    RatPoly comp = compose(f, g);
    auto [scalar, prim] = comp.split_integer();
    if (is_irreducible_over_rationals(prim)) return std::nullopt;
    Factorization fact = factor_over_integers(prim);
    const IntPoly& divisor = fact.factors.front().first;
    auto cofactor = try_exact_div(prim, divisor);
    if (!cofactor) throw std::logic_error("search: factor does not divide composition");
    SubstitutionWitness w{g, divisor, *cofactor, scalar};
    require_verified(w, f);
    return w;
}

SliceOutcome run_integer_slice(const Plan& plan, long slice) {
    SliceOutcome out{slice, 0, {}};
    long a = slice + 1;
    const long B = plan.B;
    for (long b = -B; b <= B; ++b) {
        for (long c = -B; c <= B; ++c) {
            // the pair g and -g(-x) covers leading coefficients a and -a
            const long signs[2][3] = {{a, b, c}, {-a, b, -c}};
            for (const auto& t : signs) {
                ++out.tested;
                RatPoly g(std::vector<Rational>{Rational(t[2]), Rational(t[1]),
                                                Rational(t[0])});
                if (auto w = witness_for(plan.target, g)) out.found.push_back(*w);
            }
        }
    }
    return out;
}

SliceOutcome run_rational_slice(const Plan& plan, long slice) {
    SliceOutcome out{slice, 0, {}};
    const long B = plan.B;
    long q = slice / (2 * B) + 1;
    long ai = slice % (2 * B);
    long a = ai < B ? ai - B : ai - B + 1;  // -B..-1, 1..B
    for (long b = -B; b <= B; ++b) {
        for (long c = -B; c <= B; ++c) {
            long g4 = std::gcd(std::gcd(std::labs(a), std::labs(b)),
                               std::gcd(std::labs(c), q));
            if (g4 != 1) continue;
            ++out.tested;
            RatPoly g(std::vector<Rational>{make_rational(c, q), make_rational(b, q),
                                            make_rational(a, q)});
            if (auto w = witness_for(plan.target, g)) out.found.push_back(*w);
        }
    }
    return out;
}

// identify g with g(-x); key is the smaller coefficient vector of the two
std::vector<Rational> witness_key(const SubstitutionWitness& w) {
    std::vector<Rational> v1 = w.substitution.coeffs();
    std::vector<Rational> v2 = v1;
    for (std::size_t i = 1; i < v2.size(); i += 2) v2[i] = -v2[i];
    return v2 < v1 ? v2 : v1;
}

ordered_json outcome_to_json(const Plan& plan, const SliceOutcome& o) {
    ordered_json j;
    j["digest"] = plan.digest;
    j["slice"] = o.slice;
    j["tested"] = o.tested;
    ordered_json ws = ordered_json::array();
    for (const auto& w : o.found) ws.push_back(json_of(w));
    j["witnesses"] = ws;
    return j;
}

ordered_json plan_header_json(const Plan& plan) {
    ordered_json j;
    j["digest"] = plan.digest;
    j["mode"] = plan.mode == SearchMode::integer_box ? "integer" : "rational";
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : plan.target.coeffs()) coeffs.push_back(c.get_str());
    j["target"] = coeffs;
    j["coeff_bound"] = plan.B;
    j["denom_bound"] = plan.Q;
    j["total_slices"] = plan.total_slices;
    return j;
}

struct CheckpointState {
    bool has_header = false;
    long next_slice = 0;
    std::vector<SliceOutcome> outcomes;  // in slice order
};

CheckpointState read_checkpoint(const std::string& path, const Plan& plan) {
    CheckpointState st;
    std::ifstream in(path);
    if (!in.good()) return st;
    std::string line;
    long expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line);
        if (j.value("digest", "") != plan.digest)
            throw std::runtime_error(
                "checkpoint mismatch: digest differs from the current target/bounds");
        if (!st.has_header) {
            if (!j.contains("mode"))
                throw std::runtime_error("checkpoint: missing header line");
            st.has_header = true;
            continue;
        }
        SliceOutcome o;
        o.slice = j.at("slice").get<long>();
        if (o.slice != expected)
            throw std::runtime_error("checkpoint: slice records out of order");
        ++expected;
        o.tested = j.at("tested").get<std::uint64_t>();
        for (const auto& wj : j.at("witnesses")) o.found.push_back(witness_from_json(wj));
        st.outcomes.push_back(std::move(o));
    }
    st.next_slice = expected;
    return st;
}

SearchReport run_plan(const Plan& plan, const SearchOptions& opts) {
    CheckpointState st;
    std::ofstream ckpt;
    if (!opts.checkpoint_path.empty()) {
        st = read_checkpoint(opts.checkpoint_path, plan);
        ckpt.open(opts.checkpoint_path, std::ios::app);
        if (!st.has_header) ckpt << plan_header_json(plan).dump() << "\n";
    }

    long stop_at = plan.total_slices;
    if (opts.stop_after_slices && *opts.stop_after_slices < stop_at)
        stop_at = std::max<long>(st.next_slice, *opts.stop_after_slices);

    unsigned jobs = resolve_jobs(opts.jobs);
    long cursor = st.next_slice;
    while (cursor < stop_at) {
        long batch = std::min<long>(jobs, stop_at - cursor);
        std::vector<SliceOutcome> results(batch);
        std::atomic<long> next{0};
        auto work = [&]() {
            while (true) {
                long i = next.fetch_add(1);
                if (i >= batch) return;
                long slice = cursor + i;
                results[i] = plan.mode == SearchMode::integer_box
                                 ? run_integer_slice(plan, slice)
                                 : run_rational_slice(plan, slice);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<long>(jobs, batch); ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        for (auto& r : results) {
            if (ckpt.is_open()) ckpt << outcome_to_json(plan, r).dump() << "\n";
            st.outcomes.push_back(std::move(r));
        }
        cursor += batch;
    }
    if (ckpt.is_open()) ckpt.flush();

    SearchReport report;
    report.mode = plan.mode;
    report.target = plan.target;
    report.coeff_bound = plan.B;
    report.denom_bound = plan.Q;
    report.total_slices = plan.total_slices;
    report.completed_slices = cursor;
    report.exhausted = cursor == plan.total_slices;
    report.digest = plan.digest;
    std::vector<std::vector<Rational>> seen;
    for (const auto& o : st.outcomes) {
        report.compositions_tested += o.tested;
        for (const auto& w : o.found) {
            auto key = witness_key(w);
            bool dup = false;
            for (const auto& k : seen)
                if (k == key) { dup = true; break; }
            if (!dup) {
                seen.push_back(key);
                report.witnesses.push_back(w);
            }
        }
    }
    return report;
}

}  // namespace

SearchReport search_integer_witness(const IntPoly& f, long bound,
                                    const SearchOptions& opts) {
    return run_plan(make_plan(SearchMode::integer_box, f.to_rat(), bound, 1), opts);
}

SearchReport search_rational_witness(const RatPoly& f, long bound, long denom_bound,
                                     const SearchOptions& opts) {
    return run_plan(make_plan(SearchMode::rational_box, f, bound, denom_bound), opts);
}

SearchReport resume(const std::string& checkpoint_path, const SearchOptions& opts) {
    std::ifstream in(checkpoint_path);
    if (!in.good()) throw std::runtime_error("resume: cannot open checkpoint file");
    std::string line;
    if (!std::getline(in, line) || line.empty())
        throw std::runtime_error("resume: empty checkpoint file");
    ordered_json j = ordered_json::parse(line);
    if (!j.contains("mode") || !j.contains("target"))
        throw std::runtime_error("resume: malformed checkpoint header");
    SearchMode mode = j.at("mode").get<std::string>() == "integer"
                          ? SearchMode::integer_box
                          : SearchMode::rational_box;
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("target")) {
        Rational r(c.get<std::string>());
        r.canonicalize();
        coeffs.push_back(r);
    }
    RatPoly target(std::move(coeffs));
    long B = j.at("coeff_bound").get<long>();
    long Q = j.at("denom_bound").get<long>();
    Plan plan = make_plan(mode, target, B, Q);
    if (plan.digest != j.at("digest").get<std::string>())
        throw std::runtime_error("resume: digest mismatch (checkpoint edited?)");
    SearchOptions with_path = opts;
    with_path.checkpoint_path = checkpoint_path;
    return run_plan(plan, with_path);
}

}  // namespace superirr
