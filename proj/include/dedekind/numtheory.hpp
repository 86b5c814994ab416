#pragma once

#include "dedekind/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace dedekind {

bool is_prime(std::uint64_t n);

// Smallest k >= 1 with a^k = 1 (mod m); 0 if gcd(a, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
BigInt big_pow(std::uint64_t base, unsigned exp);

// prime -> exponent
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

// The first `count` odd primes: 3, 5, 7, 11, ...
std::vector<std::uint64_t> first_odd_primes(std::size_t count);

}  // namespace dedekind
