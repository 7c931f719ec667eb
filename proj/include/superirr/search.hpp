#pragma once

// Brute-force sweeps over quadratic substitutions, collecting verified
// reducibility witnesses. Enumeration is sliced; slices can run on a worker
// pool and results merge in slice order, so reports never depend on the
// thread count. Completed slices are appended to a JSON-Lines checkpoint
// keyed by a digest of the target and bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superirr/constructions.hpp"

namespace superirr {

enum class SearchMode { integer_box, rational_box };

struct SearchOptions {
    unsigned jobs = 0;                      // 0 = flag/env/hardware default
    std::string checkpoint_path;            // empty = stateless run
    std::optional<long> stop_after_slices;  // stop early, leaving a resumable checkpoint
};

struct SearchReport {
    SearchMode mode = SearchMode::integer_box;
    RatPoly target;
    long coeff_bound = 0;
    long denom_bound = 1;
    std::vector<SubstitutionWitness> witnesses;  // deduplicated, discovery order
    bool exhausted = false;
    long completed_slices = 0;
    long total_slices = 0;
    std::uint64_t compositions_tested = 0;
    std::string digest;
};

// g = a x^2 + b x + c with b, c in [-bound, bound]; each slice a in
// [1, bound] also tests the partner -g(-x), covering negative leading
// coefficients. Witness lists identify g with g(-x) and keep the first
// discovery.
SearchReport search_integer_witness(const IntPoly& f, long bound,
                                    const SearchOptions& opts = {});

// g = (a x^2 + b x + c)/q over the primitive tuples gcd(a,b,c,q) = 1 with
// q in [1, denom_bound], a != 0.
SearchReport search_rational_witness(const RatPoly& f, long bound, long denom_bound,
                                     const SearchOptions& opts = {});

// Continue an interrupted run; target and bounds come from the checkpoint.
SearchReport resume(const std::string& checkpoint_path, const SearchOptions& opts = {});

unsigned resolve_jobs(unsigned requested);

}  // namespace superirr
