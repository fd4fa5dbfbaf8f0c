#pragma once

// Small elementary number-theory utilities on machine integers.

#include <vector>

namespace hmp {

// Divisors of n in ascending order (n >= 1).
std::vector<unsigned long> divisors(unsigned long n);

// Proper divisors: all d | n with d < n, ascending.
std::vector<unsigned long> proper_divisors(unsigned long n);

// Maximal proper divisors n/p over the distinct primes p | n, ascending.
// Empty for n = 1.
std::vector<unsigned long> maximal_proper_divisors(unsigned long n);

// Distinct prime factors, ascending.
std::vector<unsigned long> prime_factors(unsigned long n);

// Smallest prime factor; 0 for n <= 1.
unsigned long smallest_prime_factor(unsigned long n);

// Euler totient (n >= 1).
unsigned long totient(unsigned long n);

// Number of divisors of n (n >= 1).
unsigned long divisor_count(unsigned long n);

}  // namespace hmp
