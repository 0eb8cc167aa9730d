// JSON run configuration for the simulate command.  Documents carry a
// schema_version field (currently 1) and are validated strictly: unknown
// keys, missing keys, and malformed values all raise ConfigError before any
// computation starts.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "geoflow/geodesic.hpp"

namespace geoflow {

struct ParsedRun {
  int dimension;
  int points_per_axis;
  SimConfig sim;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
};

// Parses and validates a config document.  Initial data comes either from a
// named preset ("hs_cosine": sigma = cos x, rho = 1/2; "stationary_rho":
// sigma = 0, rho = 1) or from explicit coefficient lists
// [[k..., re, im], ...] assigned with Hermitian completion.
ParsedRun parse_run_config(const std::string& json_text);

}  // namespace geoflow
