#include "geoflow/run_config.hpp"

#include <cmath>
#include <complex>
#include <set>
#include <string>

#include <json.hpp>

#include "geoflow/errors.hpp"
#include "geoflow/fourier_scalar.hpp"
#include "geoflow/grid.hpp"

namespace geoflow {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : object.items()) {
    if (allowed.find(item.key()) == allowed.end()) {
      throw ConfigError("config: unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

const json& require_key(const json& object, const std::string& key) {
  const auto it = object.find(key);
  if (it == object.end()) throw ConfigError("config: missing key \"" + key + "\"");
  return *it;
}

int require_int(const json& object, const std::string& key) {
  const json& value = require_key(object, key);
  if (!value.is_number_integer()) {
    throw ConfigError("config: \"" + key + "\" must be an integer");
  }
  return value.get<int>();
}

double require_real(const json& object, const std::string& key) {
  const json& value = require_key(object, key);
  if (!value.is_number()) throw ConfigError("config: \"" + key + "\" must be a number");
  return value.get<double>();
}

FourierScalar parse_coeff_list(const GridSpec& spec, const json& list, const std::string& name) {
  if (!list.is_array()) throw ConfigError("config: \"" + name + "\" must be a list");
  FourierScalar out(spec);
  const int nyquist = spec.points_per_axis() / 2;
  for (const json& entry : list) {
    if (!entry.is_array() || entry.size() != static_cast<std::size_t>(spec.dimension() + 2)) {
      throw ConfigError("config: each \"" + name + "\" entry needs " +
                        std::to_string(spec.dimension()) + " wavenumbers plus re, im");
    }
    int k[2] = {0, 0};
    for (int axis = 0; axis < spec.dimension(); ++axis) {
      if (!entry[axis].is_number_integer()) {
        throw ConfigError("config: wavenumbers in \"" + name + "\" must be integers");
      }
      k[axis] = entry[axis].get<int>();
      if (k[axis] < -nyquist || k[axis] > nyquist) {
        throw ConfigError("config: wavenumber " + std::to_string(k[axis]) + " in \"" + name +
                          "\" is outside the grid range");
      }
    }
    const json& re = entry[spec.dimension()];
    const json& im = entry[spec.dimension() + 1];
    if (!re.is_number() || !im.is_number()) {
      throw ConfigError("config: coefficient values in \"" + name + "\" must be numbers");
    }
    const std::complex<double> c(re.get<double>(), im.get<double>());
    if (spec.dimension() == 1) {
      out.set_mode(k[0], c);
    } else {
      out.set_mode(k[0], k[1], c);
    }
  }
  return out;
}

}  // namespace

ParsedRun parse_run_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config: malformed JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ConfigError("config: document must be a JSON object");
  reject_unknown_keys(doc,
                      {"schema_version", "dimension", "points_per_axis", "dt", "t_end",
                       "output_every", "initial", "blowup_threshold", "seed", "tolerance"},
                      "the top level");

  if (require_int(doc, "schema_version") != 1) {
    throw ConfigError("config: unsupported schema_version (expected 1)");
  }
  const int dimension = require_int(doc, "dimension");
  if (dimension != 1 && dimension != 2) {
    throw ConfigError("config: dimension must be 1 or 2");
  }
  const int points = require_int(doc, "points_per_axis");
  GridSpec spec = [&] {
    try {
      return GridSpec::make(dimension, points);
    } catch (const std::invalid_argument& err) {
      throw ConfigError(std::string("config: ") + err.what());
    }
  }();

  const json& initial = require_key(doc, "initial");
  if (!initial.is_object()) throw ConfigError("config: \"initial\" must be an object");
  FourierScalar sigma0(spec);
  FourierScalar rho0(spec);
  if (initial.contains("preset")) {
    reject_unknown_keys(initial, {"preset"}, "\"initial\"");
    const json& preset = initial["preset"];
    if (!preset.is_string()) throw ConfigError("config: \"preset\" must be a string");
    const std::string name = preset.get<std::string>();
    if (dimension != 1) throw ConfigError("config: presets are defined on the circle only");
    if (name == "hs_cosine") {
      sigma0 = cosine_mode(spec, {1});
      rho0 = constant_field(spec, 0.5);
    } else if (name == "stationary_rho") {
      rho0 = constant_field(spec, 1.0);
    } else {
      throw ConfigError("config: unknown preset \"" + name + "\"");
    }
  } else {
    reject_unknown_keys(initial, {"sigma_coeffs", "rho_coeffs"}, "\"initial\"");
    if (!initial.contains("sigma_coeffs") && !initial.contains("rho_coeffs")) {
      throw ConfigError("config: \"initial\" needs a preset or coefficient lists");
    }
    if (initial.contains("sigma_coeffs")) {
      sigma0 = parse_coeff_list(spec, initial["sigma_coeffs"], "sigma_coeffs");
    }
    if (initial.contains("rho_coeffs")) {
      rho0 = parse_coeff_list(spec, initial["rho_coeffs"], "rho_coeffs");
    }
  }
  if (std::abs(mean(sigma0)) > 1e-12) {
    throw ConfigError("config: sigma initial data must have zero mean");
  }

  SimConfig sim(std::move(sigma0), std::move(rho0));
  sim.dt = require_real(doc, "dt");
  if (!(sim.dt > 0.0)) throw ConfigError("config: dt must be positive");
  sim.t_end = require_real(doc, "t_end");
  if (!(sim.t_end > 0.0)) throw ConfigError("config: t_end must be positive");
  if (doc.contains("output_every")) {
    const int every = require_int(doc, "output_every");
    if (every < 1) throw ConfigError("config: output_every must be at least 1");
    sim.output_every = every;
  }
  if (doc.contains("blowup_threshold")) {
    const double threshold = require_real(doc, "blowup_threshold");
    if (!(threshold > 0.0)) throw ConfigError("config: blowup_threshold must be positive");
    sim.blowup_threshold = threshold;
  }

  ParsedRun out{dimension, points, std::move(sim), std::nullopt, std::nullopt};
  if (doc.contains("seed")) {
    const json& seed = doc["seed"];
    if (seed.is_number_unsigned()) {
      out.seed = seed.get<std::uint64_t>();
    } else if (seed.is_number_integer() && seed.get<long long>() >= 0) {
      out.seed = static_cast<std::uint64_t>(seed.get<long long>());
    } else {
      throw ConfigError("config: \"seed\" must be a non-negative integer");
    }
  }
  if (doc.contains("tolerance")) {
    const double tol = require_real(doc, "tolerance");
    if (!(tol > 0.0)) throw ConfigError("config: tolerance must be positive");
    out.tolerance = tol;
  }
  return out;
}

}  // namespace geoflow
