#include "genphi/oracle.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "genphi/arith.hpp"

namespace genphi {

namespace {

std::mutex g_memo_mutex;
std::unordered_map<u64, OrderProfile> g_profile_memo;  // modulus -> profile
std::atomic<bool> g_memo_enabled{true};

OrderProfile convolve(const OrderProfile& a, const OrderProfile& b) {
  OrderProfile out;
  out.total = checked_mul(a.total, b.total);
  out.counts.clear();
  for (const auto& [o1, c1] : a.counts)
    for (const auto& [o2, c2] : b.counts)
      out.counts[std::lcm(o1, o2)] += c1 * c2;
  return out;
}

OrderProfile compute_unit_profile(u64 m) {
  OrderProfile profile;
  profile.counts.clear();
  u64 phi_m = euler_phi(m);
  profile.total = phi_m;
  Factorization phi_factors = factorize(phi_m == 0 ? 1 : phi_m);
  u64 found = 0;
  for (u64 u = 1; u < m; ++u) {
    if (std::gcd(u, m) != 1) continue;
    // Order of u: start from phi(m) and strip primes while the power stays 1.
    u64 t = phi_m;
    for (const auto& e : phi_factors) {
      for (u32 i = 0; i < e.exponent; ++i) {
        if (t % e.prime == 0 && powmod(u, t / e.prime, m) == 1)
          t /= e.prime;
        else
          break;
      }
    }
    ++profile.counts[t];
    ++found;
  }
  if (m == 1) {  // Z_1: the single residue 0 is the unit 1 of the zero ring
    profile.counts[1] = 1;
    found = 1;
    profile.total = 1;
  }
  if (found != profile.total)
    throw InternalError("unit_order_profile: unit count does not match phi");
  return profile;
}

}  // namespace

namespace detail {
void set_oracle_memo_enabled(bool enabled) { g_memo_enabled.store(enabled); }
void clear_oracle_memo() {
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_profile_memo.clear();
}
}  // namespace detail

OrderProfile unit_order_profile(u64 m, u64 bound) {
  if (m == 0) throw DomainError("unit_order_profile: modulus must be >= 1");
  if (m > 1 && euler_phi(m) > bound)
    throw BoundError("unit_order_profile: unit group exceeds bound");
  if (g_memo_enabled.load()) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_profile_memo.find(m);
    if (it != g_profile_memo.end()) return it->second;
  }
  OrderProfile profile = compute_unit_profile(m);
  if (g_memo_enabled.load()) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_profile_memo.emplace(m, profile);
  }
  return profile;
}

OrderProfile enumerate_unit_orders(const RingSpec& r, u64 bound) {
  u64 units = 1;
  for (u64 m : r.moduli()) {
    u64 phi_m = euler_phi(m);
    if (phi_m != 0 && units > bound / phi_m)
      throw BoundError("enumerate_unit_orders: unit group exceeds bound");
    units *= phi_m;
  }
  OrderProfile profile;
  profile.counts = {{1, 1}};
  for (u64 m : r.moduli()) profile = convolve(profile, unit_order_profile(m, bound));
  return profile;
}

OrderProfile profile_of_decomposition(const CyclicDecomposition& d) {
  OrderProfile profile;
  profile.counts = {{1, 1}};
  for (u64 order : d.primary()) {
    OrderProfile cyclic;
    cyclic.total = order;
    cyclic.counts.clear();
    for (u64 e : divisors(order)) cyclic.counts[e] = euler_phi(e);
    profile = convolve(profile, cyclic);
  }
  return profile;
}

CyclicDecomposition structure_from_profile(const OrderProfile& profile) {
  u64 sum = 0;
  for (const auto& [order, count] : profile.counts) {
    if (order == 0 || count == 0)
      throw InternalError("structure_from_profile: zero order or count");
    sum += count;
  }
  auto it1 = profile.counts.find(1);
  if (sum != profile.total || it1 == profile.counts.end() || it1->second != 1)
    throw InternalError("structure_from_profile: malformed profile");

  // Per prime q: N_j = #elements of order dividing q^j is q^(e_j), and
  // e_j - e_(j-1) counts the q-partition's parts of size >= j.
  std::vector<u64> orders;
  for (const auto& e : factorize(profile.total)) {
    u64 q = e.prime;
    std::vector<u64> parts_ge;  // parts_ge[j-1] = #parts >= j
    u64 n_j = 1;                // N_0
    u64 prev_exp = 0;
    for (u64 qj = q;; qj = checked_mul(qj, q)) {
      auto it = profile.counts.find(qj);
      u64 add = it == profile.counts.end() ? 0 : it->second;
      if (add == 0) break;
      n_j += add;
      u64 exp = 0, rest = n_j;
      while (rest % q == 0) rest /= q, ++exp;
      if (rest != 1 || exp <= prev_exp)
        throw InternalError("structure_from_profile: profile is not a q-group count");
      parts_ge.push_back(exp - prev_exp);
      prev_exp = exp;
      if (qj > profile.total / q) break;  // next power would exceed the group
    }
    for (size_t j = 0; j < parts_ge.size(); ++j) {
      u64 next = j + 1 < parts_ge.size() ? parts_ge[j + 1] : 0;
      if (parts_ge[j] < next)
        throw InternalError("structure_from_profile: part counts increase");
      u64 multiplicity = parts_ge[j] - next;  // parts of size exactly j+1
      for (u64 i = 0; i < multiplicity; ++i)
        orders.push_back(checked_pow(q, (u32)(j + 1)));
    }
  }
  CyclicDecomposition result{std::span<const u64>(orders)};

  // Full self-check: the reconstruction must reproduce the input statistics.
  if (!(profile_of_decomposition(result) == profile))
    throw InternalError("structure_from_profile: no abelian group has this profile");
  return result;
}

CyclicDecomposition oracle_uk(u64 n, u32 k, u64 bound) {
  if (n == 0) throw DomainError("oracle_uk: n must be >= 1");
  if (k == 0) throw DomainError("oracle_uk: k must be >= 1");
  RingSpec ring = RingSpec::of_zn(n);
  CyclicDecomposition dec;
  for (u32 i = 0; i < k; ++i) {
    dec = structure_from_profile(enumerate_unit_orders(ring, bound));
    ring = RingSpec(std::span<const u64>(dec.primary()));
  }
  return dec;
}

}  // namespace genphi
