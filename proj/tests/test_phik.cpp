// The generalized totient phi^k. Cross-checked against euler_phi at k = 1
// and against the independently implemented group iteration at higher k;
// the published worked-example traces are reproduced term by term.

#include <vector>

#include "doctest.h"
#include "genphi/arith.hpp"
#include "genphi/phik.hpp"
#include "genphi/units.hpp"

using namespace genphi;

TEST_CASE("phi_k golden values") {
  CHECK(phi_k(7000, 0) == 7000);
  CHECK(phi_k(7000, 1) == 2400);
  CHECK(phi_k(7000, 2) == 80);
  CHECK(phi_k(1080000, 3) == 160);
  CHECK(phi_k(1, 10) == 1);
  CHECK(phi_k(2, 1) == 1);
  // phi^2 differs from the iterated classical totient already at 7000.
  CHECK(iterated_phi(7000, 2) == 640);
  CHECK_THROWS_AS(phi_k(0, 1), DomainError);
}

TEST_CASE("phi_k_prime_power golden values") {
  CHECK(phi_k_prime_power(2, 3, 2) == 1);
  CHECK(phi_k_prime_power(5, 3, 2) == 40);
  CHECK(phi_k_prime_power(7, 1, 2) == 2);
  CHECK(phi_k_prime_power(7, 1, 1) == 6);
  CHECK(phi_k_prime_power(2, 10, 2) == 128);
  CHECK(phi_k_prime_power(3, 2, 1) == 6);
  CHECK_THROWS_AS(phi_k_prime_power(6, 1, 1), DomainError);
  CHECK_THROWS_AS(phi_k_prime_power(3, 0, 1), DomainError);
  CHECK_THROWS_AS(phi_k_prime_power(3, 1, 0), DomainError);
}

TEST_CASE("phi_k agrees with euler_phi at k = 1") {
  for (u64 n = 1; n <= 100'000; ++n) {
    CAPTURE(n);
    REQUIRE(phi_k(n, 1) == euler_phi(n));
  }
}

TEST_CASE("phi_k equals the order of U^k(Z_n)") {
  for (u64 n = 1; n <= 3000; ++n)
    for (u32 k = 1; k <= 4; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(phi_k(n, k) == uk_decomposition(n, k).order());
    }
}

TEST_CASE("closed-form trace terms") {
  // phi^2(7000) = [2^3 part] x [5^3 part] x [7 part]
  //             = 1 x (phi(4) phi(5) 5) x phi(6) = 1 x 2*4*5 x 2 = 80.
  auto t2 = phi_k_prime_power_terms(2, 3, 2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].label == "1");
  CHECK(t2[0].value == 1);

  auto t5 = phi_k_prime_power_terms(5, 3, 2);
  REQUIRE(t5.size() == 3);
  CHECK(t5[0].label == "phi^1(4)");
  CHECK(t5[0].value == 2);
  CHECK(t5[1].label == "phi^1(5)");
  CHECK(t5[1].value == 4);
  CHECK(t5[2].label == "5^1");
  CHECK(t5[2].value == 5);

  auto t7 = phi_k_prime_power_terms(7, 1, 2);
  REQUIRE(t7.size() == 1);
  CHECK(t7[0].label == "phi^1(6)");
  CHECK(t7[0].value == 2);

  u64 product = 1;
  for (const auto* terms : {&t2, &t5, &t7})
    for (const auto& t : *terms) product *= t.value;
  CHECK(product == 80);

  // Term products always reproduce the value.
  for (u64 p : {2, 3, 5, 7, 11})
    for (u32 alpha = 1; alpha <= 5; ++alpha)
      for (u32 k = 1; k <= 4; ++k) {
        CAPTURE(p);
        CAPTURE(alpha);
        CAPTURE(k);
        u64 prod = 1;
        for (const auto& t : phi_k_prime_power_terms(p, alpha, k))
          prod *= t.value;
        REQUIRE(prod == phi_k_prime_power(p, alpha, k));
      }
}

TEST_CASE("results identical with the memo cache disabled") {
  std::vector<std::pair<u64, u32>> probes = {
      {7000, 2}, {1080000, 3}, {1024, 2}, {997, 4}};
  std::vector<u64> with;
  for (auto [n, k] : probes) with.push_back(phi_k(n, k));
  detail::set_phik_memo_enabled(false);
  detail::clear_phik_memo();
  for (size_t i = 0; i < probes.size(); ++i)
    CHECK(phi_k(probes[i].first, probes[i].second) == with[i]);
  detail::set_phik_memo_enabled(true);
}
