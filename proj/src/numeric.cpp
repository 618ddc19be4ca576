#include "phinil/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace phinil {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t prime_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_prime_power(std::uint64_t n) { return factorize(n).size() == 1; }

unsigned multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2 || std::gcd(a, m) != 1) {
    throw std::invalid_argument("multiplicative_order: arguments not coprime");
  }
  const std::uint64_t base = a % m;
  std::uint64_t acc = base;
  unsigned r = 1;
  while (acc != 1) {
    acc = (acc * base) % m;
    ++r;
  }
  return r;
}

}  // namespace phinil
