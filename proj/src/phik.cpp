#include "genphi/phik.hpp"

#include <atomic>
#include <mutex>
#include <unordered_map>

#include "genphi/arith.hpp"

namespace genphi {

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
std::unordered_map<PakKey, u64, PakHash> g_memo;
std::atomic<bool> g_memo_enabled{true};

u64 phi_k_prime_power_impl(u64 p, u32 alpha, u32 k) {
  if (p == 2) return alpha < 2ull * k ? 1 : u64(1) << (alpha - 2 * k + 1);
  // Odd p:
  //   phi^k(p^a) = phi^(k-1)(p-1) * p^(a-k) * prod_{i=1}^{k-1} phi^i(p)   (a >= k)
  //   phi^k(p^a) = phi^(k-1)(p-1) * prod_{i=k-a+1}^{k-1} phi^i(p)         (a <  k)
  u64 result = phi_k(p - 1, k - 1);
  u32 lo = alpha >= k ? 1 : k - alpha + 1;
  for (u32 i = lo; i + 1 <= k; ++i)
    result = checked_mul(result, phi_k_prime_power(p, 1, i));
  if (alpha > k) result = checked_mul(result, checked_pow(p, alpha - k));
  return result;
}

}  // namespace

namespace detail {
void set_phik_memo_enabled(bool enabled) { g_memo_enabled.store(enabled); }
void clear_phik_memo() {
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo.clear();
}
}  // namespace detail

u64 phi_k_prime_power(u64 p, u32 alpha, u32 k) {
  if (alpha == 0) throw DomainError("phi_k_prime_power: alpha must be >= 1");
  if (k == 0) throw DomainError("phi_k_prime_power: k must be >= 1");
  if (!is_prime(p)) throw DomainError("phi_k_prime_power: p must be prime");
  PakKey key{p, alpha, k};
  if (g_memo_enabled.load()) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  u64 result = phi_k_prime_power_impl(p, alpha, k);
  if (g_memo_enabled.load()) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(key, result);
  }
  return result;
}

u64 phi_k(u64 n, u32 k) {
  if (n == 0) throw DomainError("phi_k: n must be >= 1");
  if (k == 0) return n;
  u64 result = 1;
  for (const auto& e : factorize(n))
    result = checked_mul(result, phi_k_prime_power(e.prime, e.exponent, k));
  return result;
}

std::vector<PhiKTerm> phi_k_prime_power_terms(u64 p, u32 alpha, u32 k) {
  if (alpha == 0) throw DomainError("phi_k_prime_power_terms: alpha must be >= 1");
  if (k == 0) throw DomainError("phi_k_prime_power_terms: k must be >= 1");
  if (!is_prime(p)) throw DomainError("phi_k_prime_power_terms: p must be prime");
  std::vector<PhiKTerm> terms;
  auto pow_label = [](u64 base, u32 exp) {
    return std::to_string(base) + "^" + std::to_string(exp);
  };
  auto phi_label = [](u32 i, u64 arg) {
    return "phi^" + std::to_string(i) + "(" + std::to_string(arg) + ")";
  };
  if (p == 2) {
    if (alpha < 2ull * k)
      terms.push_back({"1", 1});
    else
      terms.push_back({pow_label(2, alpha - 2 * k + 1), u64(1) << (alpha - 2 * k + 1)});
    return terms;
  }
  terms.push_back({phi_label(k - 1, p - 1), phi_k(p - 1, k - 1)});
  u32 lo = alpha >= k ? 1 : k - alpha + 1;
  for (u32 i = k - 1; i + 1 > lo; --i)
    terms.push_back({phi_label(i, p), phi_k_prime_power(p, 1, i)});
  if (alpha > k) terms.push_back({pow_label(p, alpha - k), checked_pow(p, alpha - k)});
  return terms;
}

}  // namespace genphi
