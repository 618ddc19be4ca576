#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace phinil {

bool is_prime(std::uint64_t n);

// Prime factorization as ascending (prime, exponent) pairs; empty for n = 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t prime_part(std::uint64_t n, std::uint64_t p);

bool is_prime_power(std::uint64_t n);

// Least r >= 1 with a^r = 1 (mod m). Requires gcd(a, m) = 1 and m >= 2.
unsigned multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace phinil
