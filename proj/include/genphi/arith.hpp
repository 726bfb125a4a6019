#pragma once
// Integer arithmetic foundation: gcd, exact 64-bit primality and
// factorization, Euler's totient and its iterates, and small sieves.
//
// Everything here is exact over the full uint64 range. is_prime uses a
// deterministic Miller-Rabin witness set; factorize combines a smallest-
// prime-factor sieve (small n), trial division, and Brent's variant of
// Pollard rho (large n).

#include <vector>

#include "genphi/common.hpp"

namespace genphi {

// Prime factorization of a positive integer, primes strictly ascending.
// factorize(1) has no entries.
struct Factorization {
  struct Entry {
    u64 prime;
    u32 exponent;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  u64 value() const;  // product of prime powers, overflow-checked
  bool empty() const { return entries.empty(); }
  auto begin() const { return entries.begin(); }
  auto end() const { return entries.end(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

u64 gcd(u64 a, u64 b);  // gcd(0, b) = b; gcd(0, 0) = 0

// Exact for all n >= 1. n = 0 violates the precondition.
bool is_prime(u64 n);

Factorization factorize(u64 n);  // pre: n >= 1

u64 euler_phi(u64 n);  // pre: n >= 1; euler_phi(1) = 1
u64 euler_phi(const Factorization& f);

// k-fold application of euler_phi; k = 0 returns n unchanged.
u64 iterated_phi(u64 n, u32 k);

// If n is p^e for a prime p (e >= 1), reports p and e and returns true.
bool is_prime_power(u64 n, u64* prime = nullptr, u32* exponent = nullptr);

// All divisors of n, ascending.
std::vector<u64> divisors(u64 n);

// t[i] = euler_phi(i) for 0 < i <= limit (t[0] unused), via a linear sieve.
// Independent of the factorization-based euler_phi above, which makes the
// two usable as cross-checks. pre: limit <= 2^30.
std::vector<u32> totient_table(u32 limit);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

}  // namespace genphi
