#pragma once
// Gcd-corrected product expansions of Euler's totient.
//
// The two-argument identity is phi(a*b) = phi(a) * phi(b) * g / phi(g) with
// g = gcd(a, b). phi_product_pow2 expands phi of a 2^r-element product into
// per-element phi factors plus one gcd correction per merge of a balanced
// binary tree: pair corrections at level 0, then block-vs-block corrections
// g/phi(g) for adjacent blocks of 2, 4, ... elements. phi_product_general
// splits an arbitrary list into odd-many blocks of the largest power-of-two
// size, expands each block, and peels blocks left to right, correcting each
// block against the product of everything to its right (the last correction
// is against an empty tail, i.e. 1).
//
// Intermediate corrections like g/phi(g) are not individually integers, so
// the expansion accumulates a signed prime-exponent map and converts once at
// the end; a negative exponent at that point would be a bug (InternalError).
// Results are exact for input products up to 128 bits; larger inputs raise
// OverflowError (a BoundError).

#include <span>
#include <vector>

#include "genphi/common.hpp"

namespace genphi {

// phi(a*b) via the gcd-corrected identity; exact, overflow-checked.
u64 phi_pair(u64 a, u64 b);  // pre: a, b >= 1

// Full expansion trace: every phi(a_i) leaf and every g/phi(g) correction,
// plus the final value.
struct PhiProductExpansion {
  struct PhiTerm {
    u128 argument;
    u128 phi;
  };
  struct RatioTerm {  // contributes g / phi(g)
    u128 g;
    u128 phi_g;
  };
  std::vector<PhiTerm> phi_terms;
  std::vector<RatioTerm> ratio_terms;
  u128 value;
};

// pre: values non-empty, each >= 1, length a power of two for the pow2 form.
PhiProductExpansion phi_product_expand_pow2(std::span<const u64> values);
PhiProductExpansion phi_product_expand(std::span<const u64> values);

u128 phi_product_pow2(std::span<const u64> values);
u128 phi_product_general(std::span<const u64> values);

// Direct route: phi of the combined factorization, no expansion. Used as the
// independent cross-check for the two functions above.
u128 euler_phi_of_product(std::span<const u64> values);

}  // namespace genphi
