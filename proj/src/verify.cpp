#include "genphi/verify.hpp"

#include <algorithm>
#include <fstream>

#include "genphi/arith.hpp"
#include "genphi/oracle.hpp"
#include "genphi/phik.hpp"
#include "genphi/units.hpp"

#ifndef GENPHI_DATA_DIR
#define GENPHI_DATA_DIR "data"
#endif

namespace genphi {

bool Manifest::contains(std::string_view id) const { return find(id) != nullptr; }

const ManifestEntry* Manifest::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

Manifest Manifest::parse(const nlohmann::json& j) {
  Manifest m;
  m.version = j.value("version", std::string());
  for (const auto& je : j.at("entries")) {
    ManifestEntry e;
    e.id = je.at("id").get<std::string>();
    e.summary = je.value("summary", std::string());
    e.data = je.value("data", nlohmann::json::object());
    m.entries.push_back(std::move(e));
  }
  return m;
}

Manifest Manifest::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("manifest: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return parse(j);
}

std::string Manifest::default_path() {
  return std::string(GENPHI_DATA_DIR) + "/known_discrepancies.json";
}

namespace {

// Multiset difference a \ b of sorted vectors.
std::vector<u64> multiset_minus(const std::vector<u64>& a, const std::vector<u64>& b) {
  std::vector<u64> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

u32 v2(u64 n) {
  u32 v = 0;
  while (n % 2 == 0) n /= 2, ++v;
  return v;
}

// Is (closed vs iter) exactly the registered collapsed-2-part difference?
// Requires v2(n) >= 2k+1, equal orders, and the difference confined to
// replacing {2, 2^(a-2k)} with {2^(a-2k+1)} where a = v2(n).
bool is_registered_p2_collapse(u64 n, u32 k, const CyclicDecomposition& closed,
                               const CyclicDecomposition& iter) {
  u32 a = v2(n);
  if (a < 2 * k + 1) return false;
  if (closed.order() != iter.order()) return false;
  std::vector<u64> closed_extra = multiset_minus(closed.primary(), iter.primary());
  std::vector<u64> iter_extra = multiset_minus(iter.primary(), closed.primary());
  u64 collapsed = u64(1) << (a - 2 * k + 1);
  std::vector<u64> want_iter = {2, collapsed >> 1};
  std::sort(want_iter.begin(), want_iter.end());
  return closed_extra == std::vector<u64>{collapsed} && iter_extra == want_iter;
}

CyclicDecomposition closed_form_decomposition(u64 n, u32 k) {
  CyclicDecomposition result;
  for (const auto& e : factorize(n))
    result = result.direct_sum(uk_prime_power_closed_form(e.prime, e.exponent, k));
  return result;
}

}  // namespace

DiscrepancyReport agreement_report(u64 max_n, u32 kmax, u64 oracle_bound) {
  if (kmax == 0) throw DomainError("agreement_report: kmax must be >= 1");
  DiscrepancyReport r;
  r.equation = "agreement";
  r.bound = max_n;
  r.timestamp = iso8601_utc_now();
  r.version = kVersion;
  r.resolved_conventions["routes"] =
      "phi_k vs closed form vs unit-functor iteration vs brute-force oracle";
  r.resolved_conventions["kmax"] = std::to_string(kmax);
  r.resolved_conventions["oracle_bound"] = std::to_string(oracle_bound);

  for (u64 n = 1; n <= max_n; ++n) {
    for (u32 k = 1; k <= kmax; ++k) {
      u64 phi = phi_k(n, k);
      CyclicDecomposition iter = uk_decomposition(n, k);
      CyclicDecomposition closed = closed_form_decomposition(n, k);
      CyclicDecomposition oracle = oracle_uk(n, k, oracle_bound);

      if (!(oracle == iter))
        r.mismatches.push_back({n, k, "oracle: " + oracle.to_text(),
                                "iteration: " + iter.to_text(), ""});
      if (phi != iter.order() || phi != oracle.order() || phi != closed.order())
        r.mismatches.push_back(
            {n, k, "orders: phi_k=" + std::to_string(phi),
             "iteration=" + std::to_string(iter.order()) +
                 " closed=" + std::to_string(closed.order()) +
                 " oracle=" + std::to_string(oracle.order()),
             ""});
      if (!(closed == iter)) {
        std::string cause = is_registered_p2_collapse(n, k, closed, iter)
                                ? "p2-closed-form-structure"
                                : "";
        r.mismatches.push_back({n, k, "iteration/oracle: " + iter.to_text(),
                                "closed form: " + closed.to_text(), cause});
      }
    }
  }
  return r;
}

std::vector<DiscrepancyReport> run_verify_suite(std::string_view suite,
                                                const VerifyOptions& options) {
  std::vector<DiscrepancyReport> reports;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "agreement") {
    reports.push_back(agreement_report(options.agreement_max,
                                       options.agreement_kmax,
                                       options.oracle_bound));
    known = true;
  }
  if (all || suite == "inequality") {
    reports.push_back(cross_verify("gr-inequality", options.inequality_max));
    known = true;
  }
  if (all || suite == "cyclicity") {
    reports.push_back(cross_verify("u2-cyclic", options.cyclicity_max));
    known = true;
  }
  if (all || suite == "classifiers") {
    reports.push_back(cross_verify("eq-k2", options.classifier_max));
    reports.push_back(cross_verify("eq-k2-cyclic", options.classifier_max));
    reports.push_back(cross_verify("eq-k3", options.classifier_max));
    reports.push_back(cross_verify("eq-k3-u2cyclic", options.classifier_max));
    known = true;
  }
  if (!known)
    throw DomainError("run_verify_suite: unknown suite '" + std::string(suite) + "'");
  return reports;
}

bool all_mismatches_registered(const std::vector<DiscrepancyReport>& reports,
                               const Manifest& manifest) {
  for (const auto& r : reports)
    for (const auto& e : r.mismatches)
      if (e.cause.empty() || !manifest.contains(e.cause)) return false;
  return true;
}

}  // namespace genphi
