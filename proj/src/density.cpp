#include "hmp/density.hpp"

#include <algorithm>

#include "hmp/errors.hpp"

namespace hmp {

DensityEstimate empirical_density(std::vector<unsigned long> s, unsigned long n,
                                  unsigned tail_percent) {
    if (n < 1) throw schema_error("window must be >= 1");
    if (tail_percent < 1 || tail_percent > 100)
        throw schema_error("tail percent must be in [1, 100]");
    for (unsigned long x : s)
        if (x < 1 || x > n) throw schema_error("period " + std::to_string(x) +
                                               " lies outside the window [1, " +
                                               std::to_string(n) + "]");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    DensityEstimate e;
    e.window = n;
    e.count = s.size();
    e.ratio = make_rat(Int(e.count), Int(n));
    e.tail_start = n - n * tail_percent / 100 + 1;

    std::size_t pos = 0;  // |S cap [1, m]|
    bool first = true;
    for (unsigned long m = 1; m <= n; ++m) {
        while (pos < s.size() && s[pos] <= m) ++pos;
        if (m < e.tail_start) continue;
        const Rat r = make_rat(Int(pos), Int(m));
        if (first || r < e.tail_min) {
            e.tail_min = r;
            first = false;
        }
    }
    return e;
}

unsigned long compute_N(unsigned long m, unsigned long holonomy_order,
                        unsigned long coverage_threshold) {
    return std::max({m + 1, holonomy_order, coverage_threshold});
}

ProgressionBound lower_bound(unsigned long n, unsigned long member_limit) {
    if (n < 1) throw schema_error("threshold must be >= 1");
    ProgressionBound b;
    b.n = n;
    b.modulus = factorial(n);
    b.residue = 1;
    b.density = make_rat(Int(1), b.modulus);
    for (unsigned long i = 0; i < member_limit; ++i)
        b.first_members.push_back(Int(1) + Int(i) * b.modulus);
    return b;
}

Json estimate_to_json(const DensityEstimate& e) {
    Json j;
    j["window"] = e.window;
    j["count"] = e.count;
    j["ratio"] = rat_to_json(e.ratio);
    j["tail_start"] = e.tail_start;
    j["tail_min"] = rat_to_json(e.tail_min);
    return j;
}

Json bound_to_json(const ProgressionBound& b) {
    Json j;
    j["threshold"] = b.n;
    j["modulus"] = int_to_json(b.modulus);
    j["residue"] = b.residue;
    j["density"] = rat_to_json(b.density);
    Json members = Json::array();
    for (const Int& m : b.first_members) members.push_back(int_to_json(m));
    j["first_members"] = members;
    return j;
}

}  // namespace hmp
