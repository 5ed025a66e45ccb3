#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace realclass {

using Prime = std::uint64_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// pi(n): the prime divisors of n, ascending.
inline std::vector<Prime> prime_divisors(std::uint64_t n) {
  std::vector<Prime> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// n_p: the largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, Prime p) {
  std::uint64_t part = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

inline bool is_p_power(std::uint64_t n, Prime p) { return n >= 1 && p_part(n, p) == n; }

// pi(n) is contained in primes.
inline bool is_pi_number(std::uint64_t n, const std::set<Prime>& primes) {
  for (Prime q : prime_divisors(n))
    if (!primes.count(q)) return false;
  return true;
}

}  // namespace realclass
