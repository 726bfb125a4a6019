#pragma once
// Finite abelian groups up to isomorphism, represented as multisets of
// cyclic orders.
//
// Storage is always the primary canonical form: every order is a prime
// power >= 2, sorted ascending. Arbitrary presentations (e.g. {2,20}) are
// CRT-split on construction, so equality of stored forms is exactly group
// isomorphism. The empty multiset is the trivial group.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genphi/common.hpp"

namespace genphi {

class CyclicDecomposition {
 public:
  CyclicDecomposition() = default;  // trivial group

  // Accepts any presentation. Factors of 1 are dropped (Z_1 is trivial);
  // a factor of 0 violates the precondition.
  explicit CyclicDecomposition(std::span<const u64> orders);
  CyclicDecomposition(std::initializer_list<u64> orders)
      : CyclicDecomposition(std::span<const u64>(orders.begin(), orders.size())) {}

  // Parses the text form produced by to_text: "Z2 x Z4 x Z5", or "Z1" for
  // the trivial group. Input need not be canonical.
  static CyclicDecomposition parse_text(std::string_view text);

  // Primary canonical form: prime-power orders, ascending. This doubles as
  // the JSON array form, e.g. {2,2,4,5} <-> [2,2,4,5].
  const std::vector<u64>& primary() const { return orders_; }

  // Invariant-factor presentation d1 | d2 | ... | dt, ascending.
  // Trivial group gives an empty list.
  std::vector<u64> invariant_factors() const;

  u64 order() const;  // overflow-checked product; 1 for the trivial group
  bool is_trivial() const { return orders_.empty(); }
  bool is_cyclic() const;  // trivial group counts as cyclic (Z_1)

  std::string to_text() const;

  CyclicDecomposition direct_sum(const CyclicDecomposition& other) const;

  // Isomorphism test: canonical forms are unique per isomorphism class.
  friend bool operator==(const CyclicDecomposition&,
                         const CyclicDecomposition&) = default;

 private:
  std::vector<u64> orders_;
};

}  // namespace genphi
