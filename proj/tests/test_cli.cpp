// End-to-end CLI tests through a real subprocess: output values, exit-code
// mapping (0 ok, 1 domain, 2 bound, 3 internal), envelope schema validity,
// and byte-level determinism of --json output.

#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "support/mini_schema.hpp"
#include "support/subprocess.hpp"

using nlohmann::json;

namespace {

const std::string kCli = "\"" GENPHI_CLI_PATH "\" ";

json envelope_schema() {
  std::ifstream in(std::string(GENPHI_SCHEMA_DIR) + "/output_envelope.schema.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

json report_schema() {
  std::ifstream in(std::string(GENPHI_SCHEMA_DIR) + "/discrepancy_report.schema.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

// Runs the CLI, expects exit 0, parses stdout as JSON, and validates the
// envelope against the schema.
json run_json(const std::string& args) {
  auto r = subprocess::run(kCli + args);
  CAPTURE(args);
  CAPTURE(r.out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  std::string err;
  REQUIRE_MESSAGE(minischema::validate(j, envelope_schema(), err), err);
  return j;
}

}  // namespace

TEST_CASE("cli phik") {
  json j = run_json("phik 2 7000 --json");
  CHECK(j["command"] == "phik");
  CHECK(j["result"]["value"] == 80);
  CHECK(j["provenance"] == "closed-form");

  j = run_json("phik 3 1080000 --method closed --method iter --method oracle "
               "--bound 10000000 --json");
  CHECK(j["result"]["value"] == 160);
  CHECK(j["provenance"] == "closed-form+iteration+oracle");
  CHECK(j["result"]["methods"]["closed-form"] == 160);
  CHECK(j["result"]["methods"]["iteration"] == 160);
  CHECK(j["result"]["methods"]["oracle"] == 160);

  auto text = subprocess::run(kCli + "phik 2 7000");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "phi^2(7000) = 80  [closed-form]\n");
}

TEST_CASE("cli decompose") {
  auto r = subprocess::run(kCli + "decompose 1 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "U^1(Z_5) = Z4  (order 4, primary form)\n");

  json j = run_json("decompose 3 64 --json");
  CHECK(j["result"]["text"] == "Z2");
  CHECK(j["result"]["orders"] == json::array({2}));
  CHECK(j["result"]["cyclic"] == true);

  j = run_json("decompose 2 7000 --form invariant --json");
  CHECK(j["result"]["text"] == "Z2 x Z2 x Z20");
  CHECK(j["result"]["orders"] == json::array({2, 2, 20}));
  CHECK(j["result"]["order"] == 80);

  j = run_json("decompose 0 12 --json");
  CHECK(j["result"]["text"] == "Z3 x Z4");

  j = run_json("decompose 2 2 --json");
  CHECK(j["result"]["text"] == "Z1");
  CHECK(j["result"]["order"] == 1);
}

TEST_CASE("cli iphi") {
  CHECK(run_json("iphi 2 7000 --json")["result"]["value"] == 640);
  CHECK(run_json("iphi 0 9 --json")["result"]["value"] == 9);
  CHECK(run_json("iphi 3 27 --json")["result"]["value"] == 2);
  auto r = subprocess::run(kCli + "iphi 2 7000");
  CHECK(r.out == "Phi^2(7000) = 640\n");
}

TEST_CASE("cli phiproduct") {
  json j = run_json("phiproduct 5 8 9 13 18 22 --json");
  CHECK(j["result"]["expansion_value"] == "414720");
  CHECK(j["result"]["direct_value"] == "414720");
  CHECK(j["result"]["agree"] == true);
  CHECK(j["result"]["gcd_corrections"].size() == 6);

  CHECK(run_json("phiproduct 7 --json")["result"]["expansion_value"] == "6");
  CHECK(run_json("phiproduct 3 3 --json")["result"]["expansion_value"] == "6");
  CHECK(run_json("phiproduct 5 8 9 13 --pow2 --json")["result"]["expansion_value"] ==
        "1152");

  auto r = subprocess::run(kCli + "phiproduct 5 8 9 --pow2 2>/dev/null");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli solve") {
  json j = run_json("solve eq-k3 --max 12 --json");
  CHECK(j["result"]["solutions"] ==
        json::array({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  CHECK(j["result"]["classifier"]["all_registered"] == true);

  j = run_json("solve phik-one --k 2 --max 100 --json");
  CHECK(j["result"]["solutions"] == json::array({1, 2, 3, 4, 6, 8, 12, 24}));
  CHECK(j["result"]["classifier"]["divisors_of_24"] == true);

  j = run_json("solve eq-k2 --max 50 --json");
  CHECK(j["result"]["classifier"]["mismatches"] == 0);

  auto r = subprocess::run(kCli + "solve nope --max 5 2>/dev/null");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli verify") {
  auto r = subprocess::run(kCli + "verify --suite cyclicity --max 2000");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: PASS") != std::string::npos);

  r = subprocess::run(kCli + "verify --suite agreement --max 128 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify: PASS") != std::string::npos);

  json j = run_json("verify --suite classifiers --max 300 --json");
  CHECK(j["result"]["ok"] == true);
  CHECK(j["result"]["unregistered_mismatches"] == 0);
  json rs = report_schema();
  for (const auto& rep : j["result"]["reports"]) {
    std::string err;
    CHECK_MESSAGE(minischema::validate(rep, rs, err), err);
  }

  r = subprocess::run(kCli +
                      "verify --suite cyclicity --max 200 --manifest "
                      "/no/such/manifest.json 2>/dev/null");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli exit codes") {
  auto r = subprocess::run(kCli + "phik 1 0 2>/dev/null");
  CHECK(r.exit_code == 1);  // domain error
  r = subprocess::run(kCli + "phik 1 101 --method oracle --bound 10 2>/dev/null");
  CHECK(r.exit_code == 2);  // oracle bound
  r = subprocess::run(kCli + "2>/dev/null");
  CHECK(r.exit_code == 1);  // missing subcommand
  r = subprocess::run(kCli + "--help");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli json output is byte-identical across runs") {
  for (const char* args :
       {"phik 2 7000 --json", "decompose 2 7000 --form invariant --json",
        "phiproduct 5 8 9 13 18 22 --json", "solve eq-k2 --max 200 --json"}) {
    CAPTURE(args);
    auto a = subprocess::run(kCli + args);
    auto b = subprocess::run(kCli + args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}
