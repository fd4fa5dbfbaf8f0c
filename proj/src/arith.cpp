#include "hmp/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace hmp {

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<unsigned long> lo, hi;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::vector<unsigned long> proper_divisors(unsigned long n) {
    auto d = divisors(n);
    d.pop_back();
    return d;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::vector<unsigned long> maximal_proper_divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long p : prime_factors(n)) out.push_back(n / p);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long smallest_prime_factor(unsigned long n) {
    if (n <= 1) return 0;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

unsigned long totient(unsigned long n) {
    if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
    unsigned long result = n;
    for (unsigned long p : prime_factors(n)) result -= result / p;
    return result;
}

unsigned long divisor_count(unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
    unsigned long count = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned long e = 0;
        while (n % p == 0) n /= p, ++e;
        count *= e + 1;
    }
    if (n > 1) count *= 2;
    return count;
}

}  // namespace hmp
