#pragma once
// Solvers and classifiers for the equation phi^k(n) = Phi^k(n), where phi^k
// is the generalized totient (order of U^k(Z_n)) and Phi^k is the k-fold
// composition of the classical totient, plus the cyclicity classifier for
// U^2(Z_n) and cross-verification sweeps that compare enumeration against
// the closed-form classifiers.
//
// Known solution families:
//   k = 2: n in {1, 2, 4} or n = p^a or 2*p^a (odd prime p); equivalently,
//          U(Z_n) is cyclic (the classical primitive-root moduli).
//   k = 3: published as "5, 10, 12, a divisor of 8, 2*3^a, or 2p with
//          p = 2*q^b + 1 prime, q odd prime". Two readings are implemented:
//          Literal applies divisor-closure only to the 8; DivisorClosed
//          closes every family under divisors (adding bare 3^a and bare p).
//          Enumeration matches DivisorClosed exactly; the Literal gaps are
//          registered in data/known_discrepancies.json.
//
// Cross-verification produces DiscrepancyReports: machine-readable mismatch
// lists with every resolved convention recorded.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "genphi/common.hpp"

namespace genphi {

// phi_k(n, k) == iterated_phi(n, k). n = 1 solves every k by convention.
bool is_solution_phik_eq_iphik(u64 n, u32 k);

bool classify_k2(u64 n);

enum class K3Reading { Literal, DivisorClosed };
bool classify_k3(u64 n, K3Reading reading = K3Reading::DivisorClosed);

// U^2(Z_n) cyclic iff n | 48, or n = 2^a*3^b (a <= 3), or n = 2^a*3^e*p
// (a <= 3, e <= 1, p = 5 or (p-1)/2 an odd prime power).
bool classify_u2_cyclic(u64 n);

// All n <= max_n with phi^k(n) == Phi^k(n), ascending. pre: k >= 1,
// max_n <= 10^8 (BoundError above).
std::vector<u64> enumerate_solutions(u32 k, u64 max_n);

// All n <= max_n with phi^k(n) == 1, ascending.
std::vector<u64> solve_phik_eq_one(u32 k, u64 max_n);

struct DiscrepancyEntry {
  u64 n = 0;
  u32 k = 0;                // 0 when not applicable
  std::string enumerated;   // what direct evaluation said
  std::string classifier;   // what the classifier / closed form said
  std::string cause;        // known-discrepancy id; empty = unregistered
  friend bool operator==(const DiscrepancyEntry&,
                         const DiscrepancyEntry&) = default;
};

struct DiscrepancyReport {
  std::string equation;  // which check ran
  u64 bound = 0;         // sweep limit
  std::vector<DiscrepancyEntry> mismatches;
  std::map<std::string, std::string> resolved_conventions;
  std::string timestamp;  // ISO-8601 UTC, set at creation
  std::string version;    // artifact version

  bool clean() const { return mismatches.empty(); }
  bool all_registered() const;  // no mismatch with an empty cause

  nlohmann::json to_json() const;
  static DiscrepancyReport from_json(const nlohmann::json& j);
};

// Runs enumeration against a classifier (or a direct check) for every
// n <= max_n. Tags:
//   "eq-k2"             enumerate k=2 vs classify_k2
//   "eq-k2-cyclic"      enumerate k=2 vs is_cyclic(U^1(Z_n))
//   "eq-k3"             enumerate k=3 vs both classify_k3 readings
//   "eq-k3-literal"     enumerate k=3 vs the Literal reading only
//   "eq-k3-divisor-closed"  enumerate k=3 vs the DivisorClosed reading only
//   "eq-k3-u2cyclic"    every k=3 solution must have U^2(Z_n) cyclic
//   "gr-inequality"     phi^2(n) <= Phi^2(n) for all n
//   "u2-cyclic"         classify_u2_cyclic vs is_cyclic(U^2(Z_n))
DiscrepancyReport cross_verify(std::string_view tag, u64 max_n);

}  // namespace genphi
