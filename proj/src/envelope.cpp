#include "genphi/envelope.hpp"

namespace genphi {

nlohmann::json OutputEnvelope::to_json() const {
  nlohmann::json j{{"command", command},
                   {"inputs", inputs},
                   {"result", result},
                   {"version", kVersion}};
  if (!provenance.empty()) j["provenance"] = provenance;
  return j;
}

}  // namespace genphi
