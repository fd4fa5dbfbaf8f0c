#pragma once

// Lower density bookkeeping: exact empirical density of a period set inside
// a window, and the guaranteed arithmetic-progression bound {k = 1 mod N!}
// that the positivity theorem yields once the threshold N is known.

#include <vector>

#include "hmp/bigint.hpp"
#include "hmp/json_io.hpp"

namespace hmp {

struct DensityEstimate {
    unsigned long window = 0;     // n
    unsigned long count = 0;      // |S| inside [1, n]
    Rat ratio;                    // count / n
    unsigned long tail_start = 1;
    Rat tail_min;                 // min over m in [tail_start, n] of |S cap [1, m]| / m
};

// S must lie inside [1, n]; duplicates are ignored. tail_percent in [1, 100]
// fixes the tail window as the last tail_percent percent of [1, n].
DensityEstimate empirical_density(std::vector<unsigned long> s, unsigned long n,
                                  unsigned tail_percent = 10);

// The threshold of the positivity theorem: max(m + 1, holonomy_order,
// coverage_threshold), with m the dimension of the linearization.
unsigned long compute_N(unsigned long m, unsigned long holonomy_order,
                        unsigned long coverage_threshold);

struct ProgressionBound {
    unsigned long n = 1;       // threshold N
    Int modulus;               // N!
    unsigned long residue = 1; // the progression is {k : k = residue mod modulus}
    Rat density;               // 1 / N!
    std::vector<Int> first_members;  // filled when a member limit is requested
};

// Every k = 1 mod N! has all prime factors > N, so the progression witnesses
// lower density >= 1/N!.
ProgressionBound lower_bound(unsigned long n, unsigned long member_limit = 0);

Json estimate_to_json(const DensityEstimate& e);
Json bound_to_json(const ProgressionBound& b);

}  // namespace hmp
