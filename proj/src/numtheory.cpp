#include "dedekind/numtheory.hpp"

#include <numeric>

namespace dedekind {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) return 0;
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1) {
    x = (x * (a % m)) % m;
    ++k;
  }
  return k;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

BigInt big_pow(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

std::vector<std::uint64_t> first_odd_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 3; primes.size() < count; n += 2)
    if (is_prime(n)) primes.push_back(n);
  return primes;
}

}  // namespace dedekind
