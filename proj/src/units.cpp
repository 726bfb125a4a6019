#include "genphi/units.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_map>

#include "genphi/arith.hpp"

namespace genphi {

RingSpec::RingSpec(std::span<const u64> moduli) {
  for (u64 m : moduli) {
    if (m == 0) throw DomainError("RingSpec: modulus 0 is not a finite ring");
    if (m == 1) continue;
    for (const auto& e : factorize(m))
      moduli_.push_back(checked_pow(e.prime, e.exponent));
  }
  std::sort(moduli_.begin(), moduli_.end());
}

RingSpec RingSpec::of_zn(u64 n) {
  if (n == 0) throw DomainError("RingSpec::of_zn: n must be >= 1");
  return RingSpec({&n, 1});
}

CyclicDecomposition RingSpec::additive_group() const {
  return CyclicDecomposition(std::span<const u64>(moduli_));
}

RingSpec unit_ring_of_prime_power(u64 p, u32 alpha) {
  if (alpha == 0) throw DomainError("unit_ring_of_prime_power: alpha must be >= 1");
  if (!is_prime(p)) throw DomainError("unit_ring_of_prime_power: p must be prime");
  std::vector<u64> moduli;
  if (p == 2) {
    // U(Z_2) = 1, U(Z_4) = Z_2, U(Z_2^a) = Z_2 x Z_2^(a-2) for a >= 3.
    if (alpha == 2) moduli.push_back(2);
    if (alpha >= 3) {
      moduli.push_back(2);
      moduli.push_back(u64(1) << (alpha - 2));
    }
  } else {
    // U(Z_p^a) cyclic of order (p-1)p^(a-1); CRT-split p-1.
    for (const auto& e : factorize(p - 1))
      moduli.push_back(checked_pow(e.prime, e.exponent));
    if (alpha >= 2) moduli.push_back(checked_pow(p, alpha - 1));
  }
  return RingSpec(std::span<const u64>(moduli));
}

RingSpec units_step(const RingSpec& r) {
  std::vector<u64> moduli;
  for (u64 m : r.moduli()) {
    u64 p = 0;
    u32 alpha = 0;
    if (!is_prime_power(m, &p, &alpha))
      throw InternalError("units_step: ring modulus is not a prime power");
    RingSpec step = unit_ring_of_prime_power(p, alpha);
    for (u64 q : step.moduli()) moduli.push_back(q);
  }
  return RingSpec(std::span<const u64>(moduli));
}

namespace {

struct PakKey {
  u64 p;
  u32 alpha;
  u32 k;
  friend bool operator==(const PakKey&, const PakKey&) = default;
};

struct PakHash {
  size_t operator()(const PakKey& key) const {
    size_t h = std::hash<u64>{}(key.p);
    h ^= std::hash<u64>{}((u64(key.alpha) << 32) | key.k) + 0x9e3779b97f4a7c15ull +
         (h << 6) + (h >> 2);
    return h;
  }
};

std::mutex g_memo_mutex;
std::unordered_map<PakKey, std::vector<u64>, PakHash> g_iter_memo;
std::atomic<bool> g_memo_enabled{true};

// U^k(Z_{p^alpha}) by iterating units_step on the single-component ring.
std::vector<u64> uk_iter_prime_power(u64 p, u32 alpha, u32 k) {
  PakKey key{p, alpha, k};
  if (g_memo_enabled.load()) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_iter_memo.find(key);
    if (it != g_iter_memo.end()) return it->second;
  }
  RingSpec ring = RingSpec::of_zn(checked_pow(p, alpha));
  for (u32 i = 0; i < k; ++i) ring = units_step(ring);
  std::vector<u64> result = ring.moduli();
  if (g_memo_enabled.load()) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_iter_memo.emplace(key, result);
  }
  return result;
}

}  // namespace

namespace detail {
void set_units_memo_enabled(bool enabled) { g_memo_enabled.store(enabled); }
void clear_units_memo() {
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_iter_memo.clear();
}
}  // namespace detail

CyclicDecomposition uk_decomposition(u64 n, u32 k) {
  if (n == 0) throw DomainError("uk_decomposition: n must be >= 1");
  if (k == 0) return RingSpec::of_zn(n).additive_group();
  // U and re-ringing both respect CRT products, so work per prime power.
  CyclicDecomposition result;
  for (const auto& e : factorize(n)) {
    std::vector<u64> part = uk_iter_prime_power(e.prime, e.exponent, k);
    result = result.direct_sum(CyclicDecomposition(std::span<const u64>(part)));
  }
  return result;
}

CyclicDecomposition uk_prime_power_closed_form(u64 p, u32 alpha, u32 k) {
  if (k == 0) throw DomainError("uk_prime_power_closed_form: k must be >= 1");
  if (alpha == 0)
    throw DomainError("uk_prime_power_closed_form: alpha must be >= 1");
  if (!is_prime(p)) throw DomainError("uk_prime_power_closed_form: p must be prime");
  if (p == 2) {
    // Published table, verbatim: trivial above the diagonal, Z2 on it,
    // one cyclic factor below it.
    if (2ull * k > alpha) return {};
    if (2ull * k == alpha) return CyclicDecomposition({2});
    return CyclicDecomposition({u64(1) << (alpha - 2 * k + 1)});
  }
  // Odd p: a window of lower unit groups of Z_p, plus the leftover p-part.
  //   k <  alpha: U^k(Z_p) x ... x U^1(Z_p) x Z_{p^(alpha-k)}
  //   k >= alpha: U^k(Z_p) x ... x U^(k-alpha+1)(Z_p)
  // and U^i(Z_p) = U^(i-1) of Z_{p-1}.
  u32 lo = k >= alpha ? k - alpha + 1 : 1;
  CyclicDecomposition result;
  for (u32 i = lo; i <= k; ++i)
    result = result.direct_sum(uk_decomposition(p - 1, i - 1));
  if (k < alpha) result = result.direct_sum(CyclicDecomposition({checked_pow(p, alpha - k)}));
  return result;
}

}  // namespace genphi
