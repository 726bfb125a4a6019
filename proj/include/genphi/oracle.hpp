#pragma once
// Brute-force oracle for unit-group structure, independent of every closed
// form in the library.
//
// For each ring coordinate Z_m it literally enumerates the units u (gcd(u, m)
// = 1) and computes each one's multiplicative order; coordinates combine by
// lcm-convolution of order counts, which is elementwise enumeration of the
// product group reorganized by counting. The element-order statistics of a
// finite abelian group determine it up to isomorphism: for every prime q,
// counting the elements of order dividing q^j recovers the q-part partition
// (number of parts >= j is the jump in the q-adic exponent), and that is what
// structure_from_profile inverts. The only assumption shared with the rest of
// the library is the re-ringing convention itself (Z_d carries the ring Z_d).

#include <map>

#include "genphi/abgroup.hpp"
#include "genphi/common.hpp"
#include "genphi/units.hpp"

namespace genphi {

inline constexpr u64 kDefaultOracleBound = 1'000'000;

// Multiset of element orders of a finite abelian group.
struct OrderProfile {
  u64 total = 1;                        // group order; sum of counts
  std::map<u64, u64> counts{{1, 1}};    // element order -> multiplicity
  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

// Order statistics of U(r) by per-coordinate enumeration. Refuses rings whose
// unit group is larger than bound (BoundError).
OrderProfile enumerate_unit_orders(const RingSpec& r,
                                   u64 bound = kDefaultOracleBound);

// Unique abelian group with the given order statistics. A profile no group
// realizes raises InternalError (it can only come from a bug upstream).
CyclicDecomposition structure_from_profile(const OrderProfile& profile);

// Order statistics computed combinatorially from a known decomposition
// (phi-counts per cyclic factor, lcm-convolved). Used to validate
// structure_from_profile round-trips and as its final self-check.
OrderProfile profile_of_decomposition(const CyclicDecomposition& d);

// U^k(Z_n) with every step recovered from brute-force enumeration: profile ->
// structure -> re-ring, k times. pre: n >= 1, k >= 1; every intermediate unit
// group must have order <= bound.
CyclicDecomposition oracle_uk(u64 n, u32 k, u64 bound = kDefaultOracleBound);

// U(Z_m) element orders for a single modulus. pre: phi(m) <= bound.
OrderProfile unit_order_profile(u64 m, u64 bound = kDefaultOracleBound);

namespace detail {
void set_oracle_memo_enabled(bool enabled);
void clear_oracle_memo();
}  // namespace detail

}  // namespace genphi
