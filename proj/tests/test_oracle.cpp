// Brute-force oracle tests. The oracle itself is the trusted adjudicator for
// the rest of the library, so here it is held against something even more
// primitive: literal element-by-element enumeration of product rings with
// orders found by repeated multiplication (no order formulas, no lcm
// convolution), plus combinatorial round-trips.

#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "genphi/arith.hpp"
#include "genphi/oracle.hpp"

using namespace genphi;

namespace {

// Orders of U(prod Z_mi) by walking every tuple and repeatedly multiplying
// until it returns to all-ones.
OrderProfile tuple_enumeration(const std::vector<u64>& moduli) {
  std::vector<std::vector<u64>> units(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i)
    for (u64 u = 1; u <= moduli[i]; ++u)
      if (gcd(u % moduli[i], moduli[i]) == 1) units[i].push_back(u % moduli[i]);

  OrderProfile p;
  p.total = 0;
  p.counts.clear();
  std::vector<size_t> idx(moduli.size(), 0);
  while (true) {
    std::vector<u64> tuple(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i) tuple[i] = units[i][idx[i]];
    std::vector<u64> acc = tuple;
    u64 order = 1;
    auto is_identity = [&] {
      for (size_t i = 0; i < moduli.size(); ++i)
        if (acc[i] % moduli[i] != 1 % moduli[i]) return false;
      return true;
    };
    while (!is_identity()) {
      for (size_t i = 0; i < moduli.size(); ++i)
        acc[i] = mulmod(acc[i], tuple[i], moduli[i]);
      ++order;
    }
    p.counts[order]++;
    p.total++;
    size_t d = 0;
    while (d < moduli.size() && ++idx[d] == units[d].size()) idx[d++] = 0;
    if (d == moduli.size()) break;
    if (moduli.empty()) break;
  }
  return p;
}

}  // namespace

TEST_CASE("unit_order_profile fixed cases") {
  OrderProfile p8 = unit_order_profile(8);
  CHECK(p8.total == 4);
  CHECK(p8.counts == std::map<u64, u64>{{1, 1}, {2, 3}});

  OrderProfile p5 = unit_order_profile(5);
  CHECK(p5.total == 4);
  CHECK(p5.counts == std::map<u64, u64>{{1, 1}, {2, 1}, {4, 2}});

  OrderProfile p7 = unit_order_profile(7);
  CHECK(p7.total == 6);
  CHECK(p7.counts == std::map<u64, u64>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});

  OrderProfile p1 = unit_order_profile(1);
  CHECK(p1.total == 1);
  CHECK(p1.counts == std::map<u64, u64>{{1, 1}});

  CHECK_THROWS_AS(unit_order_profile(0), DomainError);
  CHECK_THROWS_AS(unit_order_profile(101, 10), BoundError);
}

TEST_CASE("enumerate_unit_orders vs literal tuple enumeration") {
  std::vector<std::vector<u64>> rings = {
      {8}, {3, 5}, {4, 9}, {16, 25}, {2, 3, 5, 7}};
  for (const auto& moduli : rings) {
    CAPTURE(moduli);
    RingSpec r{std::span<const u64>(moduli)};
    OrderProfile expected = tuple_enumeration(moduli);
    OrderProfile got = enumerate_unit_orders(r);
    REQUIRE(got.total == expected.total);
    REQUIRE(got.counts == expected.counts);
  }
  // Convolved route on the zero ring: one element of order 1.
  OrderProfile z = enumerate_unit_orders(RingSpec{});
  CHECK(z.total == 1);
  CHECK(z.counts == std::map<u64, u64>{{1, 1}});
}

TEST_CASE("structure_from_profile fixed cases") {
  OrderProfile p;
  p.total = 4;
  p.counts = {{1, 1}, {2, 3}};
  CHECK(structure_from_profile(p) == CyclicDecomposition{2, 2});
  p.counts = {{1, 1}, {2, 1}, {4, 2}};
  CHECK(structure_from_profile(p) == CyclicDecomposition{4});
  p.total = 6;
  p.counts = {{1, 1}, {2, 1}, {3, 2}, {6, 2}};
  CHECK(structure_from_profile(p) == CyclicDecomposition{6});
  p.total = 1;
  p.counts = {{1, 1}};
  CHECK(structure_from_profile(p) == CyclicDecomposition{});
}

TEST_CASE("structure_from_profile rejects impossible profiles") {
  OrderProfile p;
  p.total = 4;
  p.counts = {{1, 2}, {2, 2}};  // two identities
  CHECK_THROWS_AS(structure_from_profile(p), InternalError);
  p.counts = {{1, 1}, {2, 3}};
  p.total = 5;  // sum mismatch
  CHECK_THROWS_AS(structure_from_profile(p), InternalError);
  p.total = 3;
  p.counts = {{1, 1}, {2, 2}};  // 3 elements killed by 2: not a 2-power
  CHECK_THROWS_AS(structure_from_profile(p), InternalError);
  p.total = 4;
  p.counts = {{1, 1}, {4, 3}};  // no element of order 2 under elements of order 4
  CHECK_THROWS_AS(structure_from_profile(p), InternalError);
}

TEST_CASE("profile -> structure round-trips on random groups") {
  std::mt19937_64 rng(0x5eed0009);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<u64> ord(2, 64);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<u64> orders;
    int L = len(rng);
    for (int i = 0; i < L; ++i) orders.push_back(ord(rng));
    CyclicDecomposition d{std::span<const u64>(orders)};
    CAPTURE(orders);
    OrderProfile p = profile_of_decomposition(d);
    REQUIRE(p.total == d.order());
    REQUIRE(structure_from_profile(p) == d);
  }
}

TEST_CASE("oracle_uk golden values") {
  CHECK(oracle_uk(7000, 2) == CyclicDecomposition{2, 2, 4, 5});
  CHECK(oracle_uk(1, 3) == CyclicDecomposition{});
  CHECK(oracle_uk(8, 1) == CyclicDecomposition{2, 2});
  CHECK(oracle_uk(1080000, 3, 10'000'000) == CyclicDecomposition{2, 2, 2, 4, 5});
  CHECK_THROWS_AS(oracle_uk(0, 1), DomainError);
  CHECK_THROWS_AS(oracle_uk(5, 0), DomainError);
  CHECK_THROWS_AS(oracle_uk(101, 1, 10), BoundError);
}

TEST_CASE("oracle agrees with the unit-functor iteration") {
  for (u64 n = 1; n <= 200; ++n)
    for (u32 k = 1; k <= 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(oracle_uk(n, k) == uk_decomposition(n, k));
    }
}

TEST_CASE("results identical with the memo cache disabled") {
  OrderProfile with = unit_order_profile(7000);
  CyclicDecomposition d_with = oracle_uk(360, 2);
  detail::set_oracle_memo_enabled(false);
  detail::clear_oracle_memo();
  CHECK(unit_order_profile(7000) == with);
  CHECK(oracle_uk(360, 2) == d_with);
  detail::set_oracle_memo_enabled(true);
}
