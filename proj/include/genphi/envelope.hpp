#pragma once
// Schema-stable JSON envelope for CLI output: command echo, inputs, result
// payload, provenance of the computation route, artifact version.

#include <string>

#include "json.hpp"

#include "genphi/common.hpp"

namespace genphi {

struct OutputEnvelope {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::string provenance;  // "closed-form", "iteration", "oracle", a "+"-join
                           // of several, or empty for non-compute commands

  nlohmann::json to_json() const;
};

}  // namespace genphi
