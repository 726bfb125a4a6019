#pragma once
// The generalized totient phi^k(n) = |U^k(Z_n)|, evaluated by closed-form
// recursion on prime powers (no group construction).
//
// This is deliberately a second, independent route to the same numbers as
// uk_decomposition(n, k).order(): the two are cross-checked in the test and
// verification suites. Note phi^k is NOT the k-fold composition of the
// classical totient; that is iterated_phi (arith.hpp), and the two disagree
// already at phi^2(7000) = 80 vs iterated 640.

#include <string>
#include <vector>

#include "genphi/common.hpp"

namespace genphi {

// phi^k(n). k = 0 returns n. pre: n >= 1.
u64 phi_k(u64 n, u32 k);

// phi^k(p^alpha) for prime p. pre: alpha >= 1, k >= 1.
u64 phi_k_prime_power(u64 p, u32 alpha, u32 k);

// The closed-form factor list whose product is phi_k_prime_power(p, alpha, k),
// for tracing/explaining. Labels are human-readable, e.g. "phi^1(4)" or "5^1".
struct PhiKTerm {
  std::string label;
  u64 value;
};
std::vector<PhiKTerm> phi_k_prime_power_terms(u64 p, u32 alpha, u32 k);

namespace detail {
void set_phik_memo_enabled(bool enabled);
void clear_phik_memo();
}  // namespace detail

}  // namespace genphi
