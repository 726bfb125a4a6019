#include "genphi/arith.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numeric>

namespace genphi {

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  char buf[48];
  int pos = 48;
  while (v) {
    buf[--pos] = char('0' + (unsigned)(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 48);
}

std::string iso8601_utc_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

constexpr u32 kSpfLimit = 1u << 20;

// Smallest prime factor for every n < kSpfLimit, built once.
const std::vector<u32>& spf_table() {
  static const std::vector<u32> table = [] {
    std::vector<u32> spf(kSpfLimit, 0);
    for (u32 i = 2; i < kSpfLimit; ++i) {
      if (spf[i] == 0)
        for (u64 j = i; j < kSpfLimit; j += i)
          if (spf[j] == 0) spf[j] = i;
    }
    return spf;
  }();
  return table;
}

const std::vector<u32>& small_primes() {
  static const std::vector<u32> primes = [] {
    std::vector<u32> ps;
    const auto& spf = spf_table();
    for (u32 i = 2; i < (1u << 16); ++i)
      if (spf[i] == i) ps.push_back(i);
    return ps;
  }();
  return primes;
}

bool miller_rabin(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  u64 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho. Deterministic: walks a fixed
// sequence of polynomial offsets until a factor splits. pre: n odd composite,
// not a prime power of a small prime.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int lam = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = f(y);
      int k = 0;
      while (k < lam && d == 1) {
        int lim = std::min(128, lam - k);
        u64 ys = y;
        for (int i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        if (d == n) {
          // Overshot: replay one step at a time from the saved point.
          d = 1;
          y = ys;
          do {
            y = f(y);
            d = std::gcd(x > y ? x - y : y - x, n);
          } while (d == 1);
          break;
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n) return d;
  }
}

u64 isqrt64(u64 n) {
  u64 r = (u64)std::sqrt((double)n);
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r > 0 && (u128)r * r > n) --r;
  while ((u128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

void factor_into(u64 n, std::vector<u64>& out);

// Splits composite n (no factors < 2^16) into primes.
void split_large(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 r = isqrt64(n);
  if (r * r == n) {
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n < kSpfLimit) {
    const auto& spf = spf_table();
    while (n > 1) {
      u32 p = spf[(u32)n];
      out.push_back(p);
      n /= p;
    }
    return;
  }
  for (u32 p : small_primes()) {
    if ((u64)p * p > n) break;
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
    if (n < kSpfLimit) {
      factor_into(n, out);
      return;
    }
  }
  split_large(n, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n == 0) throw DomainError("is_prime: n must be >= 1");
  if (n < 4) return n >= 2;
  if (n % 2 == 0) return false;
  if (n < kSpfLimit) return spf_table()[(u32)n] == n;
  // Deterministic witness set for the full 64-bit range.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == a) return true;
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  std::vector<u64> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    f.entries.push_back({primes[i], (u32)(j - i)});
    i = j;
  }
  return f;
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& e : entries) v = checked_mul(v, checked_pow(e.prime, e.exponent));
  return v;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& e : f.entries) {
    phi = checked_mul(phi, e.prime - 1);
    for (u32 i = 1; i < e.exponent; ++i) phi = checked_mul(phi, e.prime);
  }
  return phi;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw DomainError("euler_phi: n must be >= 1");
  return euler_phi(factorize(n));
}

u64 iterated_phi(u64 n, u32 k) {
  if (n == 0) throw DomainError("iterated_phi: n must be >= 1");
  for (u32 i = 0; i < k && n > 1; ++i) n = euler_phi(n);
  return n;
}

bool is_prime_power(u64 n, u64* prime, u32* exponent) {
  if (n < 2) return false;
  Factorization f = factorize(n);
  if (f.entries.size() != 1) return false;
  if (prime) *prime = f.entries[0].prime;
  if (exponent) *exponent = f.entries[0].exponent;
  return true;
}

std::vector<u64> divisors(u64 n) {
  Factorization f = factorize(n);
  std::vector<u64> ds{1};
  for (const auto& e : f.entries) {
    size_t sz = ds.size();
    u64 pp = 1;
    for (u32 i = 1; i <= e.exponent; ++i) {
      pp = checked_mul(pp, e.prime);
      for (size_t j = 0; j < sz; ++j) ds.push_back(checked_mul(ds[j], pp));
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<u32> totient_table(u32 limit) {
  if (limit > (1u << 30)) throw BoundError("totient_table: limit too large");
  std::vector<u32> phi(limit + 1, 0);
  std::vector<u32> primes;
  if (limit >= 1) phi[1] = 1;
  for (u32 i = 2; i <= limit; ++i) {
    if (phi[i] == 0) {
      phi[i] = i - 1;
      primes.push_back(i);
    }
    for (u32 p : primes) {
      u64 ip = (u64)i * p;
      if (ip > limit) break;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
  return phi;
}

}  // namespace genphi
