#pragma once
// Verification suites and the known-discrepancy manifest.
//
// The manifest (data/known_discrepancies.json) registers every place where a
// published reference value disagrees with what this library computes, each
// under a stable cause id. Suites attach cause ids to the mismatches they
// expect; a mismatch with no registered cause is an unregistered discrepancy
// and makes the run fail (CLI exit 3).

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "genphi/equations.hpp"

namespace genphi {

struct ManifestEntry {
  std::string id;
  std::string summary;
  nlohmann::json data;  // free-form details (values, example instances, ...)
};

struct Manifest {
  std::string version;
  std::vector<ManifestEntry> entries;

  bool contains(std::string_view id) const;
  const ManifestEntry* find(std::string_view id) const;

  static Manifest parse(const nlohmann::json& j);
  static Manifest load_file(const std::string& path);
  static std::string default_path();  // <data dir>/known_discrepancies.json
};

// Three-route agreement sweep: for every n <= max_n and 1 <= k <= kmax,
// the closed form, the unit-functor iteration, and the brute-force oracle
// must agree on phi^k(n) (all four routes, counting phi_k) and on the
// decomposition of U^k(Z_n). The closed form's collapsed 2-part (cause
// "p2-closed-form-structure", exactly when v2(n) >= 2k+1) is attached where
// it occurs; orders must still match.
DiscrepancyReport agreement_report(u64 max_n, u32 kmax, u64 oracle_bound);

struct VerifyOptions {
  u64 agreement_max = 2000;
  u32 agreement_kmax = 4;
  u64 oracle_bound = 1'000'000;
  u64 inequality_max = 1'000'000;
  u64 cyclicity_max = 100'000;
  u64 classifier_max = 100'000;
};

// suite: "agreement", "inequality", "cyclicity", "classifiers", or "all".
std::vector<DiscrepancyReport> run_verify_suite(std::string_view suite,
                                                const VerifyOptions& options);

// True iff every mismatch carries a cause id the manifest registers.
bool all_mismatches_registered(const std::vector<DiscrepancyReport>& reports,
                               const Manifest& manifest);

}  // namespace genphi
