#pragma once
// Iterated groups of units U^k(Z_n).
//
// U(Z_n) is the multiplicative group of residues coprime to n. To iterate
// the construction, the group is re-read as a ring: a cyclic group Z_d
// carries the ring Z_d, and direct products carry the direct-sum ring.
// U^k is then "take units, re-ring, repeat".
//
// A RingSpec is a finite direct sum of Z_m rings, kept CRT-split so every
// modulus is a prime power; the empty spec is the zero ring Z_1. For a
// prime power, the units form the classical cyclic (odd p) or Z2 x Z_2^(a-2)
// (p = 2, a >= 3) groups, which is all units_step needs.
//
// uk_decomposition iterates that one step k times. uk_prime_power_closed_form
// instead evaluates a closed-form table for U^k(Z_{p^alpha}) directly; its
// p = 2 branch deliberately reproduces the published table verbatim, which
// prints a collapsed 2-part when 2k < alpha (see data/known_discrepancies.json,
// id "p2-closed-form-structure"). Orders always agree between the two routes.

#include <span>
#include <vector>

#include "genphi/abgroup.hpp"
#include "genphi/common.hpp"

namespace genphi {

class RingSpec {
 public:
  RingSpec() = default;  // zero ring (Z_1)

  // Accepts any moduli presentation; CRT-splits into prime powers and sorts.
  // Moduli of 1 are dropped; 0 violates the precondition.
  explicit RingSpec(std::span<const u64> moduli);
  RingSpec(std::initializer_list<u64> moduli)
      : RingSpec(std::span<const u64>(moduli.begin(), moduli.size())) {}

  static RingSpec of_zn(u64 n);  // pre: n >= 1; of_zn(1) is the zero ring

  const std::vector<u64>& moduli() const { return moduli_; }
  CyclicDecomposition additive_group() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<u64> moduli_;
};

// The ring carried by U(Z_{p^alpha}). pre: p prime, alpha >= 1.
RingSpec unit_ring_of_prime_power(u64 p, u32 alpha);

// One unit-functor step: the ring carried by U(r).
RingSpec units_step(const RingSpec& r);

// U^k(Z_n) by iterating units_step; k = 0 is the additive group of Z_n.
CyclicDecomposition uk_decomposition(u64 n, u32 k);

// Literal closed-form table for U^k(Z_{p^alpha}). pre: p prime, alpha >= 1,
// k >= 1.
CyclicDecomposition uk_prime_power_closed_form(u64 p, u32 alpha, u32 k);

namespace detail {
// Testing hooks: results must be identical with the memo cache off.
void set_units_memo_enabled(bool enabled);
void clear_units_memo();
}  // namespace detail

}  // namespace genphi
