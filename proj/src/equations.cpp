#include "genphi/equations.hpp"

#include <algorithm>

#include "genphi/arith.hpp"
#include "genphi/phik.hpp"
#include "genphi/units.hpp"

namespace genphi {

namespace {

constexpr u64 kMaxSweep = 100'000'000;

void check_sweep_bound(u64 max_n) {
  if (max_n > kMaxSweep)
    throw BoundError("sweep limit exceeds the supported range (1e8)");
}

// m = q^b for an odd prime q, b >= 1?
bool is_odd_prime_power(u64 m) {
  u64 p;
  return m >= 3 && m % 2 == 1 && is_prime_power(m, &p);
}

bool is_power_of_3(u64 m) {
  if (m < 3) return false;
  while (m % 3 == 0) m /= 3;
  return m == 1;
}

// p prime with (p-1)/2 an odd prime power, i.e. p = 2*q^b + 1.
bool is_2qb_plus_1_prime(u64 p) {
  return p >= 7 && p % 2 == 1 && is_prime(p) && is_odd_prime_power((p - 1) / 2);
}

std::string verdict(bool solution) { return solution ? "solution" : "non-solution"; }

}  // namespace

bool is_solution_phik_eq_iphik(u64 n, u32 k) {
  if (n == 0) throw DomainError("is_solution_phik_eq_iphik: n must be >= 1");
  return phi_k(n, k) == iterated_phi(n, k);
}

bool classify_k2(u64 n) {
  if (n == 0) throw DomainError("classify_k2: n must be >= 1");
  if (n == 1 || n == 2 || n == 4) return true;
  Factorization f = factorize(n);
  if (f.entries.size() == 1) return f.entries[0].prime != 2;
  if (f.entries.size() == 2)
    return f.entries[0].prime == 2 && f.entries[0].exponent == 1;
  return false;
}

bool classify_k3(u64 n, K3Reading reading) {
  if (n == 0) throw DomainError("classify_k3: n must be >= 1");
  if (reading == K3Reading::Literal) {
    if (n == 5 || n == 10 || n == 12) return true;
    if (n == 1 || n == 2 || n == 4 || n == 8) return true;  // divisors of 8
    if (n % 2 == 0 && is_power_of_3(n / 2)) return true;    // 2 * 3^a
    if (n % 2 == 0 && is_2qb_plus_1_prime(n / 2)) return true;  // 2p
    return false;
  }
  // DivisorClosed: close every family under divisors, which adds the bare
  // odd halves 3^a and p.
  if (n == 1) return true;
  if (8 % n == 0 || 10 % n == 0 || 12 % n == 0) return true;
  u64 odd = n % 2 == 0 ? n / 2 : n;
  if (n % 4 == 0) return false;  // remaining families are 3^a, 2*3^a, p, 2p
  return is_power_of_3(odd) || is_2qb_plus_1_prime(odd);
}

bool classify_u2_cyclic(u64 n) {
  if (n == 0) throw DomainError("classify_u2_cyclic: n must be >= 1");
  if (n == 1) return true;
  u32 a = 0, b = 0;
  std::vector<Factorization::Entry> rest;
  for (const auto& e : factorize(n)) {
    if (e.prime == 2)
      a = e.exponent;
    else if (e.prime == 3)
      b = e.exponent;
    else
      rest.push_back(e);
  }
  if (rest.empty()) return a <= 3 || (a == 4 && b <= 1);  // 2^a*3^b or n | 48
  if (rest.size() != 1 || rest[0].exponent != 1) return false;
  u64 p = rest[0].prime;
  return a <= 3 && b <= 1 && (p == 5 || is_2qb_plus_1_prime(p));
}

std::vector<u64> enumerate_solutions(u32 k, u64 max_n) {
  if (k == 0) throw DomainError("enumerate_solutions: k must be >= 1");
  check_sweep_bound(max_n);
  std::vector<u64> out;
  for (u64 n = 1; n <= max_n; ++n)
    if (phi_k(n, k) == iterated_phi(n, k)) out.push_back(n);
  return out;
}

std::vector<u64> solve_phik_eq_one(u32 k, u64 max_n) {
  if (k == 0) throw DomainError("solve_phik_eq_one: k must be >= 1");
  check_sweep_bound(max_n);
  std::vector<u64> out;
  for (u64 n = 1; n <= max_n; ++n)
    if (phi_k(n, k) == 1) out.push_back(n);
  return out;
}

bool DiscrepancyReport::all_registered() const {
  return std::all_of(mismatches.begin(), mismatches.end(),
                     [](const DiscrepancyEntry& e) { return !e.cause.empty(); });
}

nlohmann::json DiscrepancyReport::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : mismatches) {
    nlohmann::json je{{"n", e.n},
                      {"enumerated", e.enumerated},
                      {"classifier", e.classifier}};
    if (e.k != 0) je["k"] = e.k;
    if (!e.cause.empty()) je["cause"] = e.cause;
    entries.push_back(je);
  }
  return nlohmann::json{{"equation", equation},
                        {"bound", bound},
                        {"mismatches", entries},
                        {"resolved_conventions", resolved_conventions},
                        {"timestamp", timestamp},
                        {"version", version}};
}

DiscrepancyReport DiscrepancyReport::from_json(const nlohmann::json& j) {
  DiscrepancyReport r;
  r.equation = j.at("equation").get<std::string>();
  r.bound = j.at("bound").get<u64>();
  for (const auto& je : j.at("mismatches")) {
    DiscrepancyEntry e;
    e.n = je.at("n").get<u64>();
    e.k = je.value("k", 0u);
    e.enumerated = je.at("enumerated").get<std::string>();
    e.classifier = je.at("classifier").get<std::string>();
    e.cause = je.value("cause", std::string());
    r.mismatches.push_back(std::move(e));
  }
  r.resolved_conventions =
      j.at("resolved_conventions").get<std::map<std::string, std::string>>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.version = j.at("version").get<std::string>();
  return r;
}

namespace {

DiscrepancyReport make_report(std::string_view tag, u64 max_n) {
  DiscrepancyReport r;
  r.equation = tag;
  r.bound = max_n;
  r.timestamp = iso8601_utc_now();
  r.version = kVersion;
  r.resolved_conventions["n=1"] = "counted as a solution of every equation";
  r.resolved_conventions["k=0"] = "identity (phi^0(n) = Phi^0(n) = n)";
  return r;
}

// The cause id for a k=3 solution the Literal reading misses, if known.
std::string k3_literal_gap_cause(u64 n) {
  if (is_power_of_3(n)) return "k3-literal-omits-3^a";
  if (is_2qb_plus_1_prime(n)) return "k3-literal-omits-prime-2q^b+1";
  return "";
}

}  // namespace

DiscrepancyReport cross_verify(std::string_view tag, u64 max_n) {
  check_sweep_bound(max_n);
  DiscrepancyReport r = make_report(tag, max_n);

  if (tag == "eq-k2" || tag == "eq-k2-cyclic") {
    for (u64 n = 1; n <= max_n; ++n) {
      bool e = is_solution_phik_eq_iphik(n, 2);
      bool c = tag == "eq-k2" ? classify_k2(n) : uk_decomposition(n, 1).is_cyclic();
      if (e != c)
        r.mismatches.push_back({n, 2, verdict(e),
                                tag == "eq-k2" ? verdict(c) + " per classifier"
                                               : (c ? "U(Z_n) cyclic" : "U(Z_n) not cyclic"),
                                ""});
    }
    return r;
  }

  if (tag == "eq-k3" || tag == "eq-k3-literal" || tag == "eq-k3-divisor-closed") {
    bool want_lit = tag != "eq-k3-divisor-closed";
    bool want_div = tag != "eq-k3-literal";
    r.resolved_conventions["k3-default-reading"] = "divisor-closed";
    for (u64 n = 1; n <= max_n; ++n) {
      bool e = is_solution_phik_eq_iphik(n, 3);
      bool lit = classify_k3(n, K3Reading::Literal);
      bool div = classify_k3(n, K3Reading::DivisorClosed);
      bool lit_bad = want_lit && e != lit;
      bool div_bad = want_div && e != div;
      if (!lit_bad && !div_bad) continue;
      std::string classifier;
      if (want_lit) classifier += "literal=" + verdict(lit);
      if (want_div) classifier += (classifier.empty() ? "" : ", ") +
                                  ("divisor-closed=" + verdict(div));
      std::string cause;
      if (lit_bad && !div_bad && e && !lit) cause = k3_literal_gap_cause(n);
      r.mismatches.push_back({n, 3, verdict(e), classifier, cause});
    }
    return r;
  }

  if (tag == "eq-k3-u2cyclic") {
    for (u64 n = 1; n <= max_n; ++n) {
      if (!is_solution_phik_eq_iphik(n, 3)) continue;
      if (!uk_decomposition(n, 2).is_cyclic())
        r.mismatches.push_back(
            {n, 3, "solution", "U^2(Z_n) not cyclic (must be)", ""});
    }
    return r;
  }

  if (tag == "gr-inequality") {
    std::vector<u32> phi = totient_table((u32)max_n);
    for (u64 n = 1; n <= max_n; ++n) {
      u64 lhs = phi_k(n, 2);
      u64 rhs = phi[phi[n]];  // Phi^2(n)
      if (lhs > rhs)
        r.mismatches.push_back({n, 2, "phi^2 = " + std::to_string(lhs),
                                "Phi^2 = " + std::to_string(rhs) + " (must be >=)",
                                ""});
    }
    return r;
  }

  if (tag == "u2-cyclic") {
    for (u64 n = 1; n <= max_n; ++n) {
      bool c = classify_u2_cyclic(n);
      bool d = uk_decomposition(n, 2).is_cyclic();
      if (c != d)
        r.mismatches.push_back({n, 2,
                                d ? "U^2(Z_n) cyclic" : "U^2(Z_n) not cyclic",
                                c ? "classifier: cyclic" : "classifier: not cyclic",
                                ""});
    }
    return r;
  }

  throw DomainError("cross_verify: unknown tag '" + std::string(tag) + "'");
}

}  // namespace genphi
