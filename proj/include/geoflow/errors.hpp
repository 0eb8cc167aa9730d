#pragma once

#include <stdexcept>
#include <string>

namespace geoflow {

// Two fields living on different grids were combined.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sectional-curvature query was made for a plane whose Gram determinant is
// negligible relative to the norms of its spanning vectors.
class DegeneratePlaneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A field that must have vanishing mean (e.g. the divergence potential fed to
// the velocity reconstruction) did not.
class NonzeroMeanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The time integration left the trusted regime: a field exceeded the blow-up
// threshold or became non-finite.  Carries the time of the offending step.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

// A run configuration failed validation (bad JSON, unknown key, out-of-range
// parameter, inconsistent initial data).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geoflow
